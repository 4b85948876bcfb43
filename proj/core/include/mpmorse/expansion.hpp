#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mpmorse/complex.hpp"

namespace mpmorse {

/// Strict total order on the simplices of one level set; faces must come
/// before their cofaces.
using SimplexLess = std::function<bool(SimplexId, SimplexId)>;

struct ExpansionResult {
  /// (facet, cofacet) pairs in the order they were formed.
  std::vector<std::pair<SimplexId, SimplexId>> pairs;
  std::vector<SimplexId> criticals;
};

/// Pairs every simplex of a level set with a facet or cofacet inside the
/// level set, or declares it critical.
///
/// A cell becomes pairable with its facet once that facet is its only
/// undeclared facet in the set; cells are declared critical only when no
/// such pair is available, smallest first. Facets and cofacets outside the
/// set are never consulted. Throws std::logic_error when `less` does not
/// totally order the set.
ExpansionResult homotopy_expansion(const SimplicialComplex& c,
                                   std::span<const SimplexId> level_set,
                                   const SimplexLess& less);

}  // namespace mpmorse
