#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mpmorse/morse.hpp"

namespace mpmorse {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool essential() const { return death == kInfinity; }
  bool zero_persistence() const { return !essential() && death == birth; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;

  /// Pairs with death > birth (essential pairs included), sorted by
  /// (dim, birth, death).
  std::vector<PersistencePair> positive() const;
  std::size_t essential_count(int dim) const;
};

/// Cells sorted by (phi, dimension, key). Throws std::invalid_argument if
/// phi decreases along some incidence.
std::vector<CellId> filtration_order(const LefschetzComplex& m, std::span<const double> phi);

/// Boundary matrix with rows and columns both indexed by filtration
/// position.
struct FiltrationMatrix {
  std::vector<std::vector<std::uint32_t>> columns;
  std::vector<double> values;
  std::vector<int> dims;

  std::size_t size() const { return columns.size(); }
};

FiltrationMatrix build_filtration_matrix(const LefschetzComplex& m, std::span<const CellId> order,
                                         std::span<const double> phi);

/// Positions of the cell creating and (if any) destroying each class.
struct ReducedPairs {
  static constexpr std::uint32_t kUnpaired = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

/// Standard left-to-right column reduction over F2. Verifies on exit that
/// nonzero reduced columns have pairwise distinct lowest ones.
ReducedPairs reduce(const FiltrationMatrix& d);

/// Maps filtration positions back to filtration values.
PersistenceDiagram reindex(const ReducedPairs& r, const FiltrationMatrix& d);

/// reindex(reduce(d)).
PersistenceDiagram reduce_and_pair(const FiltrationMatrix& d);

/// Full pipeline for one scalar filter on a Lefschetz complex.
PersistenceDiagram compute_persistence(const LefschetzComplex& m, std::span<const double> phi);

/// Positive-persistence multisets agree, values compared with relative
/// tolerance.
bool same_positive_persistence(const PersistenceDiagram& a, const PersistenceDiagram& b,
                               double rel_tol = 1e-9);

/// Annotation written next to a diagram in CSV output.
struct SliceTag {
  double lambda;
  double b1;
  double b2;
};

void write_diagram_csv_header(std::ostream& out);
/// Rows `dim,birth,death,lambda,b1,b2`, sorted by (dim, birth, death);
/// death `inf` for essential pairs, slice columns empty without a tag.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& d,
                       std::optional<SliceTag> tag = std::nullopt);

}  // namespace mpmorse
