#include "mpmorse/foliation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mpmorse/parallel.hpp"

namespace mpmorse {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

/// Projection of u onto the antidiagonal along direction m.
std::array<double, 2> project(std::array<double, 2> u, std::array<double, 2> m) {
  double t = (u[0] + u[1]) / (m[0] + m[1]);
  return {u[0] - t * m[0], u[1] - t * m[1]};
}

}  // namespace

Slice Slice::make(double angle, std::array<double, 2> base) {
  if (!(angle > 0.0 && angle < std::numbers::pi / 2))
    throw std::invalid_argument(fmt::format("slice angle {} is outside (0, pi/2)", angle));
  return Slice{angle, {std::cos(angle), std::sin(angle)}, base};
}

GradeExtremes compute_extremes(const MultiFiltration& mf, std::size_t vertex_count) {
  if (mf.parameters() != 2)
    throw std::invalid_argument(
        fmt::format("slicing needs a bifiltration, got {} parameters", mf.parameters()));
  GradeExtremes e{{kInfinity, kInfinity}, {-kInfinity, -kInfinity}};
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto g = mf.vertex_grade(v);
    for (int i = 0; i < 2; ++i) {
      e.lower[i] = std::min(e.lower[i], g[i]);
      e.upper[i] = std::max(e.upper[i], g[i]);
    }
  }
  if (vertex_count == 0) e = GradeExtremes{};
  return e;
}

std::vector<Slice> generate_slices(const GradeExtremes& extremes, unsigned omega) {
  if (omega == 0) throw std::invalid_argument("the number of slices per axis must be positive");
  std::vector<Slice> out;
  out.reserve(static_cast<std::size_t>(omega) * omega);
  for (unsigned j = 0; j < omega; ++j) {
    double angle = (std::numbers::pi / 2) * (j + 0.5) / omega;
    std::array<double, 2> m{std::cos(angle), std::sin(angle)};
    auto lo = project({extremes.lower[0], extremes.upper[1]}, m);
    auto hi = project({extremes.upper[0], extremes.lower[1]}, m);
    for (unsigned i = 0; i < omega; ++i) {
      double s = (i + 0.5) / omega;
      double b1 = lo[0] + s * (hi[0] - lo[0]);
      out.push_back(Slice::make(angle, {b1, -b1}));
    }
  }
  return out;
}

double push_grade(std::span<const double> grade, const Slice& slice) {
  const auto& m = slice.direction;
  const auto& b = slice.base;
  double scaled = std::max((grade[0] - b[0]) / m[0], (grade[1] - b[1]) / m[1]);
  return std::min(m[0], m[1]) * scaled;
}

std::vector<double> push_to_slice(const LefschetzComplex& m, const Slice& slice) {
  if (m.parameters() != 2 && !m.empty())
    throw std::invalid_argument("slicing needs a complex with two-parameter grades");
  std::vector<double> phi(m.size());
  for (CellId c = 0; c < m.size(); ++c) phi[c] = push_grade(m.grade(c), slice);
  return phi;
}

PersistenceSpace compute_persistence_space(const LefschetzComplex& m, std::span<const Slice> slices,
                                           unsigned workers, PhaseTimings* timings) {
  auto start = Clock::now();
  PersistenceSpace space;
  space.slices.resize(slices.size());
  std::vector<PhaseTimings> per_slice(slices.size());

  parallel_for(
      slices.size(), workers,
      [&](std::size_t i) {
        auto t0 = Clock::now();
        auto phi = push_to_slice(m, slices[i]);
        auto order = filtration_order(m, phi);
        auto matrix = build_filtration_matrix(m, order, phi);
        auto t1 = Clock::now();
        auto reduced = reduce(matrix);
        auto t2 = Clock::now();
        space.slices[i] = SliceDiagram{slices[i], reindex(reduced, matrix)};
        auto t3 = Clock::now();
        per_slice[i].building_input = elapsed_ms(t0, t1);
        per_slice[i].computing_persistence = elapsed_ms(t1, t2);
        per_slice[i].reindexing_output = elapsed_ms(t2, t3);
      },
      1);

  if (timings) {
    for (const auto& t : per_slice) {
      timings->building_input += t.building_input;
      timings->computing_persistence += t.computing_persistence;
      timings->reindexing_output += t.reindexing_output;
    }
    timings->total += elapsed_ms(start, Clock::now());
  }
  return space;
}

PersistenceSpace compute_persistence_space(const LefschetzComplex& m,
                                           const GradeExtremes& extremes, unsigned omega,
                                           unsigned workers, PhaseTimings* timings) {
  auto t0 = Clock::now();
  auto slices = generate_slices(extremes, omega);
  double line_ms = elapsed_ms(t0, Clock::now());
  if (timings) {
    timings->line_extraction += line_ms;
    timings->total += line_ms;
  }
  return compute_persistence_space(m, slices, workers, timings);
}

bool same_persistence_space(const PersistenceSpace& a, const PersistenceSpace& b, double rel_tol) {
  if (a.slices.size() != b.slices.size()) return false;
  for (std::size_t i = 0; i < a.slices.size(); ++i)
    if (!same_positive_persistence(a.slices[i].diagram, b.slices[i].diagram, rel_tol)) return false;
  return true;
}

void write_persistence_space_csv(std::ostream& out, const PersistenceSpace& space) {
  write_diagram_csv_header(out);
  for (const auto& s : space.slices)
    write_diagram_csv(out, s.diagram, SliceTag{s.slice.angle, s.slice.base[0], s.slice.base[1]});
}

void write_timings_csv_header(std::ostream& out) {
  out << "label,line_extraction_ms,building_input_ms,computing_persistence_ms,"
         "reindexing_output_ms,foliation_total_ms,wall_total_ms\n";
}

void write_timings_csv_row(std::ostream& out, std::string_view label, const PhaseTimings& t) {
  double foliation = t.building_input + t.computing_persistence + t.reindexing_output;
  fmt::print(out, "{},{:.3f},{:.3f},{:.3f},{:.3f},{:.3f},{:.3f}\n", label, t.line_extraction,
             t.building_input, t.computing_persistence, t.reindexing_output, foliation, t.total);
}

}  // namespace mpmorse
