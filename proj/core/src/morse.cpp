#include "mpmorse/morse.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "mpmorse/error.hpp"
#include "mpmorse/parallel.hpp"

namespace mpmorse {

CellId LefschetzComplex::add_cell(int dim, std::span<const double> grade,
                                  std::vector<VertexId> key) {
  if (grade.size() != parameters_)
    throw std::invalid_argument("cell grade has the wrong number of components");
  dims_.push_back(dim);
  grades_.insert(grades_.end(), grade.begin(), grade.end());
  keys_.push_back(std::move(key));
  facets_.emplace_back();
  return static_cast<CellId>(dims_.size() - 1);
}

void LefschetzComplex::set_facets(CellId t, std::vector<CellId> facets) {
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
    throw std::invalid_argument("repeated facet in an F2 incidence list");
  for (CellId s : facets) {
    if (s >= size()) throw std::out_of_range("facet id out of range");
    if (dims_[s] + 1 != dims_[t])
      throw std::invalid_argument("incidence between cells whose dimensions do not differ by one");
  }
  facets_[t] = std::move(facets);
}

int LefschetzComplex::max_dimension() const {
  return dims_.empty() ? -1 : *std::max_element(dims_.begin(), dims_.end());
}

bool LefschetzComplex::incidence(CellId t, CellId s) const {
  return std::binary_search(facets_[t].begin(), facets_[t].end(), s);
}

std::vector<CellId> LefschetzComplex::cells_of_dimension(int k) const {
  std::vector<CellId> out;
  for (CellId c = 0; c < size(); ++c)
    if (dims_[c] == k) out.push_back(c);
  return out;
}

LefschetzComplex simplicial_lefschetz(const SimplicialComplex& c, const MultiFiltration& mf) {
  LefschetzComplex m(mf.parameters());
  for (SimplexId s = 0; s < c.size(); ++s) {
    auto v = c.vertices(s);
    m.add_cell(c.dimension(s), mf.grade(s), std::vector<VertexId>(v.begin(), v.end()));
  }
  for (SimplexId s = 0; s < c.size(); ++s) {
    auto f = c.facets(s);
    m.set_facets(s, std::vector<CellId>(f.begin(), f.end()));
  }
  return m;
}

// ---------------------------------------------------------------------------

void add_column(std::vector<std::uint32_t>& target, std::span<const std::uint32_t> source,
                std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

namespace {

/// Parities of V-paths from k-simplices down to critical k-simplices.
///
/// reach(s) is the set of critical k-simplices reached an odd number of
/// times by V-paths starting at s, including the empty path when s itself
/// is critical.
class SeparatrixWalker {
 public:
  SeparatrixWalker(const DiscreteGradient& g, const SimplicialComplex& c)
      : g_(g), c_(c), state_(c.size(), unvisited), slot_(c.size(), 0) {}

  const std::vector<SimplexId>& reach(SimplexId root) {
    if (state_[root] == done) return memo_[slot_[root]];

    stack_.clear();
    push(root);
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.next < top.successors.size()) {
        SimplexId n = top.successors[top.next++];
        if (state_[n] == done) continue;
        if (state_[n] == active)
          throw InvalidGradient("closed V-path met while extracting the Morse complex");
        push(n);
        continue;
      }
      // All successors are finished; fold their parities.
      std::vector<SimplexId> acc;
      if (g_.is_critical(top.simplex)) acc.push_back(top.simplex);
      for (SimplexId n : top.successors) add_column(acc, memo_[slot_[n]], scratch_);
      state_[top.simplex] = done;
      slot_[top.simplex] = static_cast<std::uint32_t>(memo_.size());
      memo_.push_back(std::move(acc));
      stack_.pop_back();
    }
    return memo_[slot_[root]];
  }

 private:
  enum : std::uint8_t { unvisited, active, done };

  struct Frame {
    SimplexId simplex;
    std::vector<SimplexId> successors;
    std::size_t next = 0;
  };

  void push(SimplexId s) {
    state_[s] = active;
    Frame f{s, {}, 0};
    if (g_.role(s) == DiscreteGradient::Role::tail) {
      for (SimplexId n : c_.facets(g_.partner(s)))
        if (n != s) f.successors.push_back(n);
    }
    stack_.push_back(std::move(f));
  }

  const DiscreteGradient& g_;
  const SimplicialComplex& c_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<SimplexId>> memo_;
  std::vector<Frame> stack_;
  std::vector<SimplexId> scratch_;
};

}  // namespace

LefschetzComplex extract_morse_complex(const DiscreteGradient& g, const SimplicialComplex& c,
                                       const MultiFiltration& mf, unsigned workers) {
  if (g.simplex_count() != c.size())
    throw std::invalid_argument("gradient and complex sizes differ");

  auto crit = g.sorted_criticals();
  std::vector<CellId> cell_of(c.size(), static_cast<CellId>(-1));
  LefschetzComplex m(mf.parameters());
  for (SimplexId s : crit) {
    auto v = c.vertices(s);
    cell_of[s] = m.add_cell(c.dimension(s), mf.grade(s), std::vector<VertexId>(v.begin(), v.end()));
  }

  // Contiguous blocks of critical cells, one walker (and memo) per block.
  std::vector<std::vector<CellId>> facets(crit.size());
  unsigned blocks = std::max(1u, std::min<unsigned>(resolve_workers(workers),
                                                    static_cast<unsigned>(crit.size())));
  parallel_for(
      blocks, blocks,
      [&](std::size_t b) {
        std::size_t begin = crit.size() * b / blocks;
        std::size_t end = crit.size() * (b + 1) / blocks;
        SeparatrixWalker walker(g, c);
        std::vector<SimplexId> acc;
        std::vector<SimplexId> scratch;
        for (std::size_t i = begin; i < end; ++i) {
          SimplexId t = crit[i];
          acc.clear();
          for (SimplexId f : c.facets(t)) add_column(acc, walker.reach(f), scratch);
          auto& out = facets[i];
          for (SimplexId s : acc) out.push_back(cell_of[s]);
        }
      },
      1);

  for (std::size_t i = 0; i < crit.size(); ++i)
    m.set_facets(static_cast<CellId>(i), std::move(facets[i]));
  return m;
}

// ---------------------------------------------------------------------------

bool F2Matrix::at(std::size_t r, std::size_t c) const {
  return std::binary_search(columns[c].begin(), columns[c].end(), static_cast<std::uint32_t>(r));
}

F2Matrix boundary_matrix(const LefschetzComplex& m, int k) {
  F2Matrix d;
  d.column_labels = m.cells_of_dimension(k);
  d.row_labels = m.cells_of_dimension(k - 1);
  d.rows = d.row_labels.size();
  std::unordered_map<CellId, std::uint32_t> row_of;
  for (std::uint32_t r = 0; r < d.row_labels.size(); ++r) row_of[d.row_labels[r]] = r;
  d.columns.resize(d.column_labels.size());
  for (std::size_t j = 0; j < d.column_labels.size(); ++j) {
    for (CellId s : m.facets(d.column_labels[j])) d.columns[j].push_back(row_of.at(s));
    std::sort(d.columns[j].begin(), d.columns[j].end());
  }
  return d;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows) throw std::invalid_argument("matrix dimensions do not match");
  F2Matrix p;
  p.rows = a.rows;
  p.row_labels = a.row_labels;
  p.column_labels = b.column_labels;
  p.columns.resize(b.cols());
  std::vector<std::uint32_t> scratch;
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::uint32_t i : b.columns[j]) add_column(p.columns[j], a.columns[i], scratch);
  return p;
}

std::size_t rank_f2(const F2Matrix& m) {
  std::vector<std::vector<std::uint32_t>> cols = m.columns;
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_low;
  std::vector<std::uint32_t> scratch;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    while (!cols[j].empty()) {
      auto it = pivot_of_low.find(cols[j].back());
      if (it == pivot_of_low.end()) {
        pivot_of_low.emplace(cols[j].back(), j);
        ++rank;
        break;
      }
      add_column(cols[j], cols[it->second], scratch);
    }
  }
  return rank;
}

bool boundary_squares_to_zero(const LefschetzComplex& m) {
  std::vector<CellId> acc;
  std::vector<CellId> scratch;
  for (CellId t = 0; t < m.size(); ++t) {
    acc.clear();
    for (CellId s : m.facets(t)) add_column(acc, m.facets(s), scratch);
    if (!acc.empty()) return false;
  }
  return true;
}

std::vector<std::size_t> betti_numbers_f2(const LefschetzComplex& m) {
  if (!boundary_squares_to_zero(m))
    throw CorruptComplex("boundary of the Lefschetz complex does not square to zero");
  int top = m.max_dimension();
  std::vector<std::size_t> ranks(top + 2, 0);  // ranks[k] = rank of d_k
  std::vector<std::size_t> counts(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    auto d = boundary_matrix(m, k);
    counts[k] = d.cols();
    ranks[k] = rank_f2(d);
  }
  std::vector<std::size_t> betti(top + 1);
  for (int k = 0; k <= top; ++k) betti[k] = counts[k] - ranks[k] - ranks[k + 1];
  return betti;
}

bool incidence_is_monotone(const LefschetzComplex& m) {
  for (CellId t = 0; t < m.size(); ++t)
    for (CellId s : m.facets(t))
      if (!precedes(m.grade(s), m.grade(t))) return false;
  return true;
}

void write_morse_complex(std::ostream& out, const LefschetzComplex& m) {
  for (CellId c = 0; c < m.size(); ++c)
    fmt::print(out, "CELL {} dim={} grade={}\n", c, m.dimension(c), fmt::join(m.grade(c), ","));
  for (CellId t = 0; t < m.size(); ++t)
    for (CellId s : m.facets(t)) fmt::print(out, "INC {} {}\n", t, s);
}

LefschetzComplex read_morse_complex(std::istream& in) {
  struct RawCell {
    int dim;
    std::vector<double> grade;
  };
  std::vector<RawCell> cells;
  std::vector<std::pair<CellId, CellId>> incidences;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "CELL") {
      std::size_t id = 0;
      std::string dim_field;
      std::string grade_field;
      ss >> id >> dim_field >> grade_field;
      if (!ss || id != cells.size() || dim_field.rfind("dim=", 0) != 0 ||
          grade_field.rfind("grade=", 0) != 0)
        throw ParseError(fmt::format("line {}: malformed CELL record", number));
      RawCell cell{std::stoi(dim_field.substr(4)), {}};
      std::istringstream gs(grade_field.substr(6));
      std::string part;
      while (std::getline(gs, part, ',')) cell.grade.push_back(std::stod(part));
      cells.push_back(std::move(cell));
    } else if (tag == "INC") {
      CellId t = 0;
      CellId s = 0;
      ss >> t >> s;
      if (!ss) throw ParseError(fmt::format("line {}: malformed INC record", number));
      incidences.emplace_back(t, s);
    } else {
      throw ParseError(fmt::format("line {}: unknown record '{}'", number, tag));
    }
  }
  std::size_t n = cells.empty() ? 0 : cells.front().grade.size();
  LefschetzComplex m(n);
  for (CellId c = 0; c < cells.size(); ++c) m.add_cell(cells[c].dim, cells[c].grade, {c});
  std::vector<std::vector<CellId>> facets(cells.size());
  for (auto [t, s] : incidences) {
    if (t >= cells.size() || s >= cells.size()) throw ParseError("INC refers to an unknown cell");
    facets[t].push_back(s);
  }
  for (CellId t = 0; t < cells.size(); ++t) m.set_facets(t, std::move(facets[t]));
  return m;
}

}  // namespace mpmorse
