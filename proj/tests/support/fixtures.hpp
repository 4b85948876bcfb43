#pragma once

#include "mpmorse/complex.hpp"

namespace mpmorse::testing {

/// Filled triangle a=0, b=1, c=2 with f(a)=(0,5), f(b)=(1,4), f(c)=(2,3).
struct T1 {
  SimplicialComplex c = build_complex(3, {{0, 1, 2}});
  VertexFunction f{{0, 5}, {1, 4}, {2, 3}};
  MultiFiltration mf = extend_filtration(c, f);

  SimplexId id(std::initializer_list<VertexId> vs) const { return c.id_of(Simplex(vs)); }
};

/// Edge a=0, b=1 with f(a)=(0,0), f(b)=(1,1).
struct E1 {
  SimplicialComplex c = build_complex(2, {{0, 1}});
  VertexFunction f{{0, 0}, {1, 1}};
  MultiFiltration mf = extend_filtration(c, f);

  SimplexId id(std::initializer_list<VertexId> vs) const { return c.id_of(Simplex(vs)); }
};

}  // namespace mpmorse::testing
