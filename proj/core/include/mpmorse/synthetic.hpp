#pragma once

#include <cstdint>

#include "mpmorse/io.hpp"

namespace mpmorse {

/// Triangulated torus with `rows` x `cols` vertices (both at least 3), major
/// radius R and minor radius r. Vertex angles are jittered and the surface
/// is tilted so that every coordinate is injective across vertices; the
/// result depends only on the arguments. Has 6 * rows * cols simplices.
Mesh make_torus(std::size_t rows, std::size_t cols, double R = 3.0, double r = 1.0,
                std::uint64_t seed = 1);

/// Planar grid of `rows` x `cols` vertices, each square split along its
/// main diagonal. z is zero; x and y are jittered in the same way.
Mesh make_grid(std::size_t rows, std::size_t cols, std::uint64_t seed = 1);

}  // namespace mpmorse
