#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mpmorse/complex.hpp"
#include "mpmorse/gradient.hpp"

namespace mpmorse {

using CellId = std::uint32_t;

/// Graded cell set with an F2 incidence function and a multigrade per cell.
///
/// The incidence function is stored as per-cell facet lists: kappa(t, s) = 1
/// iff s is listed among the facets of t. Each cell also carries a key (the
/// vertex tuple of the simplex it comes from), used for tie-breaking.
class LefschetzComplex {
 public:
  LefschetzComplex() = default;
  explicit LefschetzComplex(std::size_t parameters) : parameters_(parameters) {}

  CellId add_cell(int dim, std::span<const double> grade, std::vector<VertexId> key);
  /// Replaces the facet list of t; the list is sorted and must be duplicate
  /// free (an F2 incidence is 0 or 1).
  void set_facets(CellId t, std::vector<CellId> facets);

  std::size_t parameters() const { return parameters_; }
  std::size_t size() const { return dims_.size(); }
  bool empty() const { return dims_.empty(); }
  int max_dimension() const;

  int dimension(CellId c) const { return dims_[c]; }
  std::span<const double> grade(CellId c) const {
    return {grades_.data() + static_cast<std::size_t>(c) * parameters_, parameters_};
  }
  std::span<const VertexId> key(CellId c) const { return keys_[c]; }
  std::span<const CellId> facets(CellId c) const { return facets_[c]; }
  bool incidence(CellId t, CellId s) const;

  /// Cells of dimension k in id order.
  std::vector<CellId> cells_of_dimension(int k) const;

 private:
  std::size_t parameters_ = 0;
  std::vector<int> dims_;
  std::vector<double> grades_;
  std::vector<std::vector<VertexId>> keys_;
  std::vector<std::vector<CellId>> facets_;
};

/// The simplicial complex as a Lefschetz complex (kappa = facet relation),
/// cell ids equal to simplex ids.
LefschetzComplex simplicial_lefschetz(const SimplicialComplex& c, const MultiFiltration& mf);

/// Critical cells of g with kappa(t, s) = parity of the number of
/// separatrices from t to s.
///
/// Cells are the critical simplices in simplex-id order. Separatrix counts
/// come from a depth-first traversal of the V-path graph below each
/// critical cell, with the parity reached from every visited simplex
/// memoised. Throws InvalidGradient when a closed V-path is met.
LefschetzComplex extract_morse_complex(const DiscreteGradient& g, const SimplicialComplex& c,
                                       const MultiFiltration& mf, unsigned workers = 0);

/// Sparse column-major 0/1 matrix; column j lists the rows holding a 1 in
/// increasing order.
struct F2Matrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::uint32_t>> columns;
  std::vector<CellId> row_labels;
  std::vector<CellId> column_labels;

  std::size_t cols() const { return columns.size(); }
  bool at(std::size_t r, std::size_t c) const;
};

/// Boundary map from k-cells to (k-1)-cells, both in cell-id order.
F2Matrix boundary_matrix(const LefschetzComplex& m, int k);

/// Product a * b over F2.
F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);
std::size_t rank_f2(const F2Matrix& m);

/// Symmetric difference of two sorted index lists (F2 column addition).
void add_column(std::vector<std::uint32_t>& target, std::span<const std::uint32_t> source,
                std::vector<std::uint32_t>& scratch);

bool boundary_squares_to_zero(const LefschetzComplex& m);

/// b_k for k = 0 .. max_dimension. Throws CorruptComplex when the boundary
/// does not square to zero.
std::vector<std::size_t> betti_numbers_f2(const LefschetzComplex& m);

/// Grades never decrease along kappa: kappa(t, s) = 1 implies grade(s) ⪯ grade(t).
bool incidence_is_monotone(const LefschetzComplex& m);

/// `CELL <id> dim=<k> grade=<g1,...,gn>` lines, then `INC <t> <s>` lines.
void write_morse_complex(std::ostream& out, const LefschetzComplex& m);
/// Reads the dump format back. Keys are set to the singleton {id}.
LefschetzComplex read_morse_complex(std::istream& in);

}  // namespace mpmorse
