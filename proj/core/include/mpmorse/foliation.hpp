#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "mpmorse/complex.hpp"
#include "mpmorse/morse.hpp"
#include "mpmorse/persistence.hpp"

namespace mpmorse {

/// A line of positive slope in the parameter plane: unit direction
/// (cos angle, sin angle) through a base point on the antidiagonal.
struct Slice {
  double angle = 0.0;
  std::array<double, 2> direction{};
  std::array<double, 2> base{};

  /// Throws std::invalid_argument unless 0 < angle < pi/2.
  static Slice make(double angle, std::array<double, 2> base);
};

struct GradeExtremes {
  std::array<double, 2> lower{};  // component-wise minimum
  std::array<double, 2> upper{};  // component-wise maximum
};

/// Component-wise min and max of the vertex grades. Throws
/// std::invalid_argument unless the filtration has exactly two parameters.
GradeExtremes compute_extremes(const MultiFiltration& mf, std::size_t vertex_count);

/// omega angles at the midpoints of omega equal sub-intervals of (0, pi/2);
/// for each angle, omega base points at the midpoints of the antidiagonal
/// interval bounded by the projections of (lower_1, upper_2) and
/// (upper_1, lower_2) along the slice direction. Slices are ordered by
/// (angle, base).
std::vector<Slice> generate_slices(const GradeExtremes& extremes, unsigned omega);

/// Scalar value of a bifiltration grade on the slice:
/// min_i m_i * max_i (g_i - b_i) / m_i.
double push_grade(std::span<const double> grade, const Slice& slice);
std::vector<double> push_to_slice(const LefschetzComplex& m, const Slice& slice);

struct SliceDiagram {
  Slice slice;
  PersistenceDiagram diagram;
};

struct PersistenceSpace {
  std::vector<SliceDiagram> slices;
};

/// Accumulated wall-clock time per phase, in milliseconds. Per-slice phases
/// are summed over slices, so with several workers they can exceed `total`.
struct PhaseTimings {
  double line_extraction = 0.0;
  double building_input = 0.0;
  double computing_persistence = 0.0;
  double reindexing_output = 0.0;
  double total = 0.0;
};

/// One persistence diagram per slice, in slice order.
PersistenceSpace compute_persistence_space(const LefschetzComplex& m, std::span<const Slice> slices,
                                           unsigned workers = 0, PhaseTimings* timings = nullptr);

/// Generates omega^2 slices from the given extremes, then computes the
/// space. Use the extremes of the original filtration so that an original
/// complex and its Morse complex are cut by the same lines.
PersistenceSpace compute_persistence_space(const LefschetzComplex& m,
                                           const GradeExtremes& extremes, unsigned omega,
                                           unsigned workers = 0, PhaseTimings* timings = nullptr);

/// Every slice's positive-persistence diagram agrees between a and b.
bool same_persistence_space(const PersistenceSpace& a, const PersistenceSpace& b,
                            double rel_tol = 1e-9);

/// Header plus every slice's rows, annotated with lambda and base point.
void write_persistence_space_csv(std::ostream& out, const PersistenceSpace& space);

void write_timings_csv_header(std::ostream& out);
/// `label,line_extraction_ms,building_input_ms,computing_persistence_ms,
/// reindexing_output_ms,foliation_total_ms,wall_total_ms`.
void write_timings_csv_row(std::ostream& out, std::string_view label, const PhaseTimings& t);

}  // namespace mpmorse
