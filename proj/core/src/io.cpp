#include "mpmorse/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mpmorse/error.hpp"

namespace mpmorse {

namespace {

/// Splits the stream into non-empty lines of whitespace-separated tokens,
/// dropping '#' comments and remembering source line numbers.
struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double parse_real(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(fmt::format("line {}: '{}' is not a real number", line, tok));
}

std::uint64_t parse_count(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(fmt::format("line {}: '{}' is not a non-negative integer", line, tok));
  return v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
  return in;
}

}  // namespace

Mesh read_off(std::istream& in) {
  auto lines = tokenize(in);
  std::size_t li = 0;
  if (lines.empty()) throw ParseError("empty OFF input");

  // The header keyword may share its line with the counts.
  std::vector<std::string> counts = lines[0].tokens;
  if (counts.front() != "OFF") throw ParseError("missing OFF header");
  counts.erase(counts.begin());
  if (counts.empty()) {
    if (lines.size() < 2) throw ParseError("missing OFF counts");
    counts = lines[1].tokens;
    li = 2;
  } else {
    li = 1;
  }
  std::size_t count_line = lines[li - 1].number;
  if (counts.size() < 2) throw ParseError(fmt::format("line {}: expected vertex and face counts", count_line));
  auto nv = parse_count(counts[0], count_line);
  auto nf = parse_count(counts[1], count_line);

  if (lines.size() < li + nv + nf)
    throw ParseError(fmt::format("OFF declares {} vertices and {} faces but the file is shorter", nv, nf));

  Mesh mesh;
  mesh.points.reserve(nv);
  for (std::uint64_t i = 0; i < nv; ++i, ++li) {
    const auto& line = lines[li];
    if (line.tokens.size() < 3)
      throw ParseError(fmt::format("line {}: vertex needs three coordinates", line.number));
    mesh.points.push_back({parse_real(line.tokens[0], line.number),
                           parse_real(line.tokens[1], line.number),
                           parse_real(line.tokens[2], line.number)});
  }
  for (std::uint64_t i = 0; i < nf; ++i, ++li) {
    const auto& line = lines[li];
    auto k = parse_count(line.tokens[0], line.number);
    if (k < 3 || line.tokens.size() < k + 1)
      throw ParseError(fmt::format("line {}: malformed face", line.number));
    std::vector<VertexId> poly;
    for (std::uint64_t j = 1; j <= k; ++j) {
      auto v = parse_count(line.tokens[j], line.number);
      if (v >= nv)
        throw ParseError(fmt::format("line {}: vertex index {} out of range", line.number, v));
      poly.push_back(static_cast<VertexId>(v));
    }
    for (std::size_t j = 1; j + 1 < poly.size(); ++j)
      mesh.faces.push_back({poly[0], poly[j], poly[j + 1]});
  }
  return mesh;
}

Mesh read_off_file(const std::string& path) {
  auto in = open(path);
  return read_off(in);
}

void write_off(std::ostream& out, const Mesh& mesh) {
  fmt::print(out, "OFF\n{} {} 0\n", mesh.points.size(), mesh.faces.size());
  for (const auto& p : mesh.points) fmt::print(out, "{} {} {}\n", p[0], p[1], p[2]);
  for (const auto& f : mesh.faces) {
    fmt::print(out, "{}", f.size());
    for (VertexId v : f) fmt::print(out, " {}", v);
    out << '\n';
  }
}

VertexFunction coordinate_function(const Mesh& mesh, std::span<const std::size_t> columns) {
  if (columns.empty()) throw std::invalid_argument("no coordinate columns selected");
  VertexFunction f(mesh.points.size(), columns.size());
  for (std::size_t v = 0; v < mesh.points.size(); ++v)
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] > 2) throw std::invalid_argument("coordinate column out of range");
      f(static_cast<VertexId>(v), i) = mesh.points[v][columns[i]];
    }
  return f;
}

std::vector<std::size_t> parse_coordinate_columns(const std::string& spec) {
  std::vector<std::size_t> out;
  std::istringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part == "x") out.push_back(0);
    else if (part == "y") out.push_back(1);
    else if (part == "z") out.push_back(2);
    else throw std::invalid_argument(fmt::format("unknown coordinate '{}' (expected x, y or z)", part));
  }
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return out;
}

GenericComplex read_generic(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty complex input");
  const auto& header = lines[0];
  if (header.tokens.size() != 3)
    throw ParseError(fmt::format("line {}: header must be 'n_vertices n_top n_params'", header.number));
  auto nv = parse_count(header.tokens[0], header.number);
  auto nt = parse_count(header.tokens[1], header.number);
  auto np = parse_count(header.tokens[2], header.number);
  if (np == 0) throw ParseError("n_params must be positive");
  if (lines.size() != 1 + nv + nt)
    throw ParseError(fmt::format("expected {} data lines after the header, found {}", nv + nt,
                                 lines.size() - 1));

  GenericComplex out;
  out.vertex_count = nv;
  std::vector<double> values;
  values.reserve(nv * np);
  for (std::uint64_t v = 0; v < nv; ++v) {
    const auto& line = lines[1 + v];
    if (line.tokens.size() != np)
      throw ParseError(fmt::format("line {}: expected {} values, found {}", line.number, np,
                                   line.tokens.size()));
    for (const auto& tok : line.tokens) values.push_back(parse_real(tok, line.number));
  }
  out.function = nv == 0 ? VertexFunction(0, np) : VertexFunction(np, std::move(values));
  for (std::uint64_t t = 0; t < nt; ++t) {
    const auto& line = lines[1 + nv + t];
    std::vector<VertexId> simplex;
    for (const auto& tok : line.tokens) {
      auto v = parse_count(tok, line.number);
      if (v >= nv)
        throw ParseError(fmt::format("line {}: vertex index {} out of range", line.number, v));
      simplex.push_back(static_cast<VertexId>(v));
    }
    out.top_simplices.push_back(std::move(simplex));
  }
  return out;
}

GenericComplex read_generic_file(const std::string& path) {
  auto in = open(path);
  return read_generic(in);
}

void write_generic(std::ostream& out, const GenericComplex& data) {
  fmt::print(out, "{} {} {}\n", data.vertex_count, data.top_simplices.size(),
             data.function.parameters());
  for (VertexId v = 0; v < data.vertex_count; ++v) {
    auto g = data.function.grade(v);
    for (std::size_t i = 0; i < g.size(); ++i) fmt::print(out, "{}{}", i ? " " : "", g[i]);
    out << '\n';
  }
  for (const auto& t : data.top_simplices) {
    for (std::size_t i = 0; i < t.size(); ++i) fmt::print(out, "{}{}", i ? " " : "", t[i]);
    out << '\n';
  }
}

VertexFunction read_vertex_function(std::istream& in, std::size_t vertex_count) {
  auto lines = tokenize(in);
  if (lines.size() != vertex_count)
    throw ParseError(fmt::format("filtration has {} lines, expected one per vertex ({})",
                                 lines.size(), vertex_count));
  if (lines.empty()) return {};
  std::size_t np = lines[0].tokens.size();
  std::vector<double> values;
  values.reserve(vertex_count * np);
  for (const auto& line : lines) {
    if (line.tokens.size() != np)
      throw ParseError(fmt::format("line {}: expected {} values", line.number, np));
    for (const auto& tok : line.tokens) values.push_back(parse_real(tok, line.number));
  }
  return VertexFunction(np, std::move(values));
}

VertexFunction read_vertex_function_file(const std::string& path, std::size_t vertex_count) {
  auto in = open(path);
  return read_vertex_function(in, vertex_count);
}

}  // namespace mpmorse
