#include "mpmorse/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mpmorse {

namespace {

std::array<double, 3> rotate(std::array<double, 3> p, double a, double b) {
  // About the x axis by a, then about the z axis by b.
  double y = p[1] * std::cos(a) - p[2] * std::sin(a);
  double z = p[1] * std::sin(a) + p[2] * std::cos(a);
  double x = p[0] * std::cos(b) - y * std::sin(b);
  y = p[0] * std::sin(b) + y * std::cos(b);
  return {x, y, z};
}

void add_square(Mesh& mesh, VertexId a, VertexId b, VertexId c, VertexId d) {
  // a b
  // c d
  mesh.faces.push_back({a, b, d});
  mesh.faces.push_back({a, c, d});
}

}  // namespace

Mesh make_torus(std::size_t rows, std::size_t cols, double R, double r, std::uint64_t seed) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("a torus needs at least 3x3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  constexpr double two_pi = 2 * std::numbers::pi;

  Mesh mesh;
  mesh.points.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      double phi = two_pi * (i + jitter(rng)) / rows;
      double theta = two_pi * (j + jitter(rng)) / cols;
      std::array<double, 3> p{(R + r * std::cos(phi)) * std::cos(theta),
                              (R + r * std::cos(phi)) * std::sin(theta), r * std::sin(phi)};
      mesh.points.push_back(rotate(p, 0.3137, 0.1729));
    }
  auto id = [&](std::size_t i, std::size_t j) {
    return static_cast<VertexId>((i % rows) * cols + (j % cols));
  };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      add_square(mesh, id(i, j), id(i, j + 1), id(i + 1, j), id(i + 1, j + 1));
  return mesh;
}

Mesh make_grid(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("a grid needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);

  Mesh mesh;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      mesh.points.push_back({j + jitter(rng), i + jitter(rng), 0.0});
  auto id = [&](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * cols + j); };
  for (std::size_t i = 0; i + 1 < rows; ++i)
    for (std::size_t j = 0; j + 1 < cols; ++j)
      add_square(mesh, id(i, j), id(i, j + 1), id(i + 1, j), id(i + 1, j + 1));
  return mesh;
}

}  // namespace mpmorse
