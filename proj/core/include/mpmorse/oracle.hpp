#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "mpmorse/complex.hpp"
#include "mpmorse/expansion.hpp"
#include "mpmorse/gradient.hpp"
#include "mpmorse/indexing.hpp"
#include "mpmorse/morse.hpp"

// Brute-force reference implementations. Everything here favours
// obviously-correct over fast and is meant for small inputs only.

namespace mpmorse::oracle {

/// Injective simplex indexing compatible with both the face order and the
/// strict grade order.
struct GlobalIndexing {
  std::vector<std::uint32_t> position;  // simplex -> J
  std::vector<SimplexId> order;         // J -> simplex
};

/// Topological order of (face-of) ∪ (strictly smaller grade), ties broken
/// by (vertex-index rank, dimension, decreasing-rank tuple). Quadratic in
/// |S|. Throws std::logic_error if the relation has a cycle.
GlobalIndexing build_global_indexing(const SimplicialComplex& c, const MultiFiltration& mf,
                                     const VertexIndexing& idx);

/// Low_f(s): cofaces of s whose grade is ⪯ grade(s), sorted by id.
std::vector<SimplexId> filtration_lower_star(const SimplicialComplex& c, const MultiFiltration& mf,
                                             SimplexId s);

struct MatchingTrace {
  DiscreteGradient gradient;
  /// Simplices whose lower star was expanded, in processing order.
  std::vector<SimplexId> primaries;
  /// The expanded lower stars, parallel to `primaries`, each sorted by id.
  std::vector<std::vector<SimplexId>> lower_stars;
};

/// Global sequential matching: simplices in J order, each unclassified one
/// has its filtration lower star expanded with `less`.
MatchingTrace matching_global(const SimplicialComplex& c, const MultiFiltration& mf,
                              const GlobalIndexing& j, const SimplexLess& less);

struct PartitionReport {
  bool same_partition = false;
  bool unique_representatives = false;
  std::string detail;

  bool ok() const { return same_partition && unique_representatives; }
};

/// Compares the level sets of the local decomposition with the lower stars
/// expanded by matching_global, and checks that every level set is Low_f of
/// exactly one member, namely the intersection of all members.
PartitionReport check_partition_equivalence(const SimplicialComplex& c, const MultiFiltration& mf);
bool verify_partition_equivalence(const SimplicialComplex& c, const MultiFiltration& mf);

/// matching_global with build_global_indexing and IndexLexOrder.
DiscreteGradient matching_gradient(const SimplicialComplex& c, const MultiFiltration& mf);

/// Finite grade poset: realized grades closed under component-wise max,
/// sorted lexicographically.
struct GradePoset {
  std::size_t parameters = 0;
  std::vector<std::vector<double>> grades;
};

GradePoset build_grade_poset(const LefschetzComplex& m);

inline constexpr std::size_t kRankInvariantCellLimit = 500;

/// rank of H_k(sublevel(u)) -> H_k(sublevel(v)) for every comparable pair
/// u ⪯ v of a grade poset.
class RankInvariant {
 public:
  using Key = std::tuple<int, std::size_t, std::size_t>;  // (k, u index, v index)

  void set(int k, std::size_t u, std::size_t v, std::size_t rank) { ranks_[{k, u, v}] = rank; }
  /// Throws std::out_of_range for pairs that were not computed.
  std::size_t rank(int k, std::size_t u, std::size_t v) const { return ranks_.at({k, u, v}); }
  const std::map<Key, std::size_t>& entries() const { return ranks_; }

  friend bool operator==(const RankInvariant&, const RankInvariant&) = default;

 private:
  std::map<Key, std::size_t> ranks_;
};

/// Rank invariant over the given poset, for k = 0 .. max_dim, computed as
/// dim(Z_k(u) + B_k(v)) - dim B_k(v) by dense elimination over F2.
/// Throws std::length_error above kRankInvariantCellLimit cells.
RankInvariant rank_invariant_bruteforce(const LefschetzComplex& m, const GradePoset& poset,
                                        int max_dim);
RankInvariant rank_invariant_bruteforce(const LefschetzComplex& m);

/// `dim,u,v,rank` with grades written as `g1;g2;...`.
void write_rank_invariant_csv(std::ostream& out, const RankInvariant& r, const GradePoset& poset);

/// Parity of separatrices from every critical cell to every critical cell
/// one dimension lower, by explicit enumeration of V-paths. Exponential in
/// the worst case. Returns (tau, sigma) simplex pairs with odd count,
/// sorted.
std::vector<std::pair<SimplexId, SimplexId>> enumerate_separatrix_parity(
    const DiscreteGradient& g, const SimplicialComplex& c);

}  // namespace mpmorse::oracle
