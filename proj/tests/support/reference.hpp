#pragma once

#include <cstddef>
#include <vector>

#include "mpmorse/complex.hpp"

// Small independent re-derivations used to check library results. They
// work from vertex tuples only and never touch the library's incidence
// structures.
namespace mpmorse::testing {

/// Cofaces of s found by scanning every simplex for a vertex superset.
std::vector<SimplexId> reference_star(const SimplicialComplex& c, SimplexId s);

/// F2 Betti numbers of the subcomplex made of the simplices in `members`
/// (all of c when empty), by dense elimination on boundary matrices built
/// from vertex tuples. Entries for k = 0 .. top dimension of c.
std::vector<std::size_t> reference_betti(const SimplicialComplex& c,
                                         const std::vector<bool>& members = {});

/// Rank over F2 of a dense 0/1 matrix (rows of equal length).
std::size_t dense_rank(std::vector<std::vector<bool>> rows);

}  // namespace mpmorse::testing
