#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mpmorse {

using VertexId = std::uint32_t;
using SimplexId = std::uint32_t;

inline constexpr SimplexId kNoSimplex = std::numeric_limits<SimplexId>::max();

/// A simplex as its strictly increasing vertex tuple.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; throws std::invalid_argument on repeated vertices.
  Simplex(std::initializer_list<VertexId> vertices);
  explicit Simplex(std::vector<VertexId> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const VertexId> vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }

  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> vertices_;
};

/// A point of the grade poset R^n, ordered component-wise.
class Multigrade {
 public:
  Multigrade() = default;
  Multigrade(std::initializer_list<double> values) : values_(values) {}
  explicit Multigrade(std::vector<double> values) : values_(std::move(values)) {}
  explicit Multigrade(std::span<const double> values)
      : values_(values.begin(), values.end()) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> components() const { return values_; }

  /// Exact component equality; grades are copied, never computed.
  friend bool operator==(const Multigrade&, const Multigrade&) = default;

 private:
  std::vector<double> values_;
};

/// u ⪯ v: every component of u is at most the matching component of v.
bool precedes(std::span<const double> u, std::span<const double> v);
/// u ⪯ v and u != v.
bool strictly_precedes(std::span<const double> u, std::span<const double> v);
bool same_grade(std::span<const double> u, std::span<const double> v);
/// Lexicographic order, used only to make outputs deterministic.
bool lex_less(std::span<const double> u, std::span<const double> v);

inline bool precedes(const Multigrade& u, const Multigrade& v) {
  return precedes(u.components(), v.components());
}

/// Face-closed simplicial complex with precomputed facet, cofacet and
/// vertex-star incidences.
///
/// Simplex ids are dense and sorted by (dimension, ascending vertex tuple).
/// Every vertex in [0, vertex_count) is a 0-simplex and its id equals its
/// vertex id. The complex is immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t vertex_count() const { return count(0); }
  /// |S|, the total number of simplices.
  std::size_t size() const { return dim_offset_.empty() ? 0 : dim_offset_.back(); }
  /// Maximum simplex dimension, or -1 for the empty complex.
  int dimension() const { return static_cast<int>(dim_offset_.size()) - 2; }
  std::size_t count(int k) const;

  /// Ids of k-simplices form the half-open range [first, second).
  std::pair<SimplexId, SimplexId> dimension_range(int k) const;

  int dimension(SimplexId s) const { return dim_of_[s]; }
  std::span<const VertexId> vertices(SimplexId s) const;
  Simplex simplex(SimplexId s) const;

  /// Facets in the order obtained by deleting vertex 0, 1, ..., k.
  std::span<const SimplexId> facets(SimplexId s) const;
  std::span<const SimplexId> cofacets(SimplexId s) const;
  /// Every simplex containing v, sorted by id.
  std::span<const SimplexId> vertex_star(VertexId v) const;

  std::optional<SimplexId> find(std::span<const VertexId> sorted_vertices) const;
  std::optional<SimplexId> find(const Simplex& s) const { return find(s.vertices()); }
  /// Like find() but throws std::out_of_range when absent.
  SimplexId id_of(const Simplex& s) const;

  /// True when a is a (not necessarily proper) face of b.
  bool is_face(SimplexId a, SimplexId b) const;

 private:
  friend SimplicialComplex build_complex(std::size_t,
                                         std::span<const std::vector<VertexId>>);

  // by_dim_[k] stores all k-simplices back to back with stride k+1.
  std::vector<std::vector<VertexId>> by_dim_;
  std::vector<SimplexId> dim_offset_;  // size d+2
  std::vector<std::uint8_t> dim_of_;
  std::vector<std::size_t> facet_offset_;
  std::vector<SimplexId> facets_;
  std::vector<std::size_t> cofacet_offset_;
  std::vector<SimplexId> cofacets_;
  std::vector<std::size_t> star_offset_;
  std::vector<SimplexId> stars_;
};

/// Builds the face closure of the given top simplices over vertex_count
/// vertices. Throws std::invalid_argument for out-of-range or repeated
/// vertex ids.
SimplicialComplex build_complex(std::size_t vertex_count,
                                std::span<const std::vector<VertexId>> top_simplices);
SimplicialComplex build_complex(std::size_t vertex_count,
                                std::initializer_list<std::vector<VertexId>> top_simplices);

/// All cofaces of s, s included, sorted by id.
std::vector<SimplexId> star(const SimplicialComplex& c, SimplexId s);
/// Throws std::out_of_range when s is not in c.
std::vector<Simplex> star(const SimplicialComplex& c, const Simplex& s);

/// Vertex-valued multiparameter function, row-major (vertex, component).
class VertexFunction {
 public:
  VertexFunction() = default;
  VertexFunction(std::size_t vertex_count, std::size_t parameters)
      : parameters_(parameters), values_(vertex_count * parameters, 0.0) {}
  VertexFunction(std::size_t parameters, std::vector<double> values);
  VertexFunction(std::initializer_list<Multigrade> grades);

  std::size_t vertex_count() const {
    return parameters_ == 0 ? 0 : values_.size() / parameters_;
  }
  std::size_t parameters() const { return parameters_; }

  double operator()(VertexId v, std::size_t i) const { return values_[v * parameters_ + i]; }
  double& operator()(VertexId v, std::size_t i) { return values_[v * parameters_ + i]; }
  std::span<const double> grade(VertexId v) const {
    return {values_.data() + v * parameters_, parameters_};
  }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::size_t parameters_ = 0;
  std::vector<double> values_;
};

struct InjectivityViolation {
  std::size_t component;
  VertexId first;
  VertexId second;
};

std::optional<InjectivityViolation> find_injectivity_violation(const VertexFunction& f);

/// Replaces every component by the vertex ranks of its values, ties broken
/// by ascending vertex id. Strict order within each component is kept.
VertexFunction make_injective(const VertexFunction& f);

/// The max-extension of a component-wise injective vertex function to all
/// simplices of a complex.
class MultiFiltration {
 public:
  MultiFiltration() = default;

  std::size_t parameters() const { return parameters_; }
  std::size_t size() const { return parameters_ == 0 ? 0 : grades_.size() / parameters_; }

  std::span<const double> grade(SimplexId s) const {
    return {grades_.data() + static_cast<std::size_t>(s) * parameters_, parameters_};
  }
  /// Vertex grades coincide with simplex grades of the 0-simplices.
  std::span<const double> vertex_grade(VertexId v) const { return grade(v); }
  Multigrade multigrade(SimplexId s) const { return Multigrade(grade(s)); }

 private:
  friend MultiFiltration extend_filtration(const SimplicialComplex&, const VertexFunction&);

  std::size_t parameters_ = 0;
  std::vector<double> grades_;
};

/// F(s)_i = max over vertices v of s of f_i(v). Throws InjectivityError
/// when f is not component-wise injective and std::invalid_argument when it
/// does not cover the vertices of c.
MultiFiltration extend_filtration(const SimplicialComplex& c, const VertexFunction& f);

}  // namespace mpmorse
