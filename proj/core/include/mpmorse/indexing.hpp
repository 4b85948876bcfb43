#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpmorse/complex.hpp"

namespace mpmorse {

/// Well-extensible vertex ranking: vertices sorted by their first
/// filtration component.
class VertexIndexing {
 public:
  VertexIndexing() = default;
  explicit VertexIndexing(std::vector<std::uint32_t> rank);

  std::size_t size() const { return rank_.size(); }
  std::uint32_t rank(VertexId v) const { return rank_[v]; }
  VertexId vertex_at(std::uint32_t r) const { return by_rank_[r]; }

  /// Rank of a simplex: the largest rank among its vertices.
  std::uint32_t simplex_rank(const SimplicialComplex& c, SimplexId s) const;
  /// The vertex of s with the largest rank.
  VertexId top_vertex(const SimplicialComplex& c, SimplexId s) const;
  /// Vertex ranks of s in decreasing order.
  std::vector<std::uint32_t> lex_key(const SimplicialComplex& c, SimplexId s) const;

 private:
  std::vector<std::uint32_t> rank_;
  std::vector<VertexId> by_rank_;
};

/// Sorts vertices by the first component of the filtration. Throws
/// InjectivityError on repeated first components.
VertexIndexing compute_indexing(const MultiFiltration& mf, std::size_t vertex_count);

/// Order on simplices used by homotopy expansion: ascending dimension, then
/// ascending lexicographic order of the decreasing vertex-rank tuple.
class IndexLexOrder {
 public:
  IndexLexOrder(const SimplicialComplex& c, const VertexIndexing& idx) : c_(&c), idx_(&idx) {}
  bool operator()(SimplexId a, SimplexId b) const;

 private:
  const SimplicialComplex* c_;
  const VertexIndexing* idx_;
};

/// Cofaces of v whose top-ranked vertex is v, sorted by id.
std::vector<SimplexId> index_lower_star(VertexId v, const VertexIndexing& idx,
                                        const SimplicialComplex& c);

/// Maximal subset of an index-based lower star sharing one multigrade.
struct LevelSet {
  VertexId owner = 0;
  Multigrade grade;
  /// Members sorted by IndexLexOrder.
  std::vector<SimplexId> simplices;
};

/// Groups an index-based lower star by exact multigrade. Level sets come out
/// in lexicographic grade order.
std::vector<LevelSet> split_index_lower_star(VertexId owner, std::span<const SimplexId> low,
                                             const SimplicialComplex& c,
                                             const MultiFiltration& mf,
                                             const VertexIndexing& idx);

/// The whole decomposition: level sets of every vertex, vertices in rank
/// order.
std::vector<LevelSet> decompose(const SimplicialComplex& c, const MultiFiltration& mf,
                                const VertexIndexing& idx);

}  // namespace mpmorse
