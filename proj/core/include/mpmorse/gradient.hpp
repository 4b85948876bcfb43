#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpmorse/complex.hpp"
#include "mpmorse/indexing.hpp"

namespace mpmorse {

/// A discrete vector field on a simplicial complex: facet/cofacet pairs plus
/// the unpaired (critical) simplices.
class DiscreteGradient {
 public:
  enum class Role : std::uint8_t { unclassified, critical, tail, head };

  DiscreteGradient() = default;
  explicit DiscreteGradient(std::size_t simplex_count)
      : role_(simplex_count, Role::unclassified), partner_(simplex_count, kNoSimplex) {
    pairs_.reserve(simplex_count / 2);
  }

  std::size_t simplex_count() const { return role_.size(); }

  /// Throws std::logic_error if either simplex is already classified.
  void add_pair(SimplexId tail, SimplexId head);
  void add_critical(SimplexId s);

  Role role(SimplexId s) const { return role_[s]; }
  bool is_critical(SimplexId s) const { return role_[s] == Role::critical; }
  bool is_classified(SimplexId s) const { return role_[s] != Role::unclassified; }
  /// Paired simplex, or kNoSimplex.
  SimplexId partner(SimplexId s) const { return partner_[s]; }

  /// Pairs and criticals in insertion order.
  std::span<const std::pair<SimplexId, SimplexId>> pairs() const { return pairs_; }
  std::span<const SimplexId> criticals() const { return criticals_; }
  /// Critical simplices sorted by id.
  std::vector<SimplexId> sorted_criticals() const;

  /// Same pairing and critical set, regardless of insertion order.
  friend bool operator==(const DiscreteGradient& a, const DiscreteGradient& b) {
    return a.role_ == b.role_ && a.partner_ == b.partner_;
  }

 private:
  std::vector<Role> role_;
  std::vector<SimplexId> partner_;
  std::vector<std::pair<SimplexId, SimplexId>> pairs_;
  std::vector<SimplexId> criticals_;
};

struct GradientOptions {
  unsigned workers = 0;
  /// When set, vertices and level sets are processed in a pseudo-random
  /// order and results are appended as they come. Used to check that the
  /// result does not depend on processing order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Local discrete gradient compatible with the max-extension filtration.
///
/// Index-based lower stars are processed independently and split into
/// level sets, and each level set goes through homotopy_expansion() with
/// IndexLexOrder. Results are concatenated in vertex-rank order.
DiscreteGradient compute_discrete_gradient(const SimplicialComplex& c,
                                           const MultiFiltration& mf,
                                           const GradientOptions& options = {});

enum class VectorFieldStatus {
  acyclic,
  /// Some pair is not (facet, cofacet) or a simplex is used twice.
  /// Unclassified simplices count as unpaired.
  illegal_pairing,
  /// A nontrivial closed V-path exists.
  closed_path,
};

VectorFieldStatus check_vector_field(const DiscreteGradient& g, const SimplicialComplex& c);
bool verify_gradient_acyclic(const DiscreteGradient& g, const SimplicialComplex& c);

/// Every pair joins simplices of equal multigrade.
bool verify_compatibility(const DiscreteGradient& g, const MultiFiltration& mf);

/// Sum over critical simplices of (-1)^dim.
long euler_characteristic_of_criticals(const DiscreteGradient& g, const SimplicialComplex& c);
long euler_characteristic(const SimplicialComplex& c);

/// `P <tail> | <head>` and `C <simplex>` records in simplex-id order.
void write_gradient(std::ostream& out, const DiscreteGradient& g, const SimplicialComplex& c);
/// `cells=<|S|> criticals=<|M|> compression=<|S|/|M|>`.
std::string gradient_stats(const DiscreteGradient& g);

/// One line per level set: `v=<id> grade=<g1,...,gn> cells=<tuples>`.
void write_decomposition(std::ostream& out, std::span<const LevelSet> sets,
                         const SimplicialComplex& c);

}  // namespace mpmorse
