#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mpmorse/complex.hpp"

namespace mpmorse {

/// A triangle mesh with 3D vertex positions.
struct Mesh {
  std::vector<std::array<double, 3>> points;
  std::vector<std::vector<VertexId>> faces;
};

/// Reads ASCII OFF. Polygons with more than three corners are fan
/// triangulated. Throws ParseError.
Mesh read_off(std::istream& in);
Mesh read_off_file(const std::string& path);
void write_off(std::ostream& out, const Mesh& mesh);

/// The function v -> (p_v[c_0], p_v[c_1], ...) for coordinate indices c_j
/// (0 = x, 1 = y, 2 = z).
VertexFunction coordinate_function(const Mesh& mesh, std::span<const std::size_t> columns);

/// Parses a column list such as "x,y" or "x,y,z" into coordinate indices.
std::vector<std::size_t> parse_coordinate_columns(const std::string& spec);

/// Contents of the generic complex format:
///
///   n_vertices n_top n_params
///   <n_params reals>           one line per vertex
///   <vertex ids>               one line per top simplex
///
/// '#' starts a comment that runs to the end of the line.
struct GenericComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<VertexId>> top_simplices;
  VertexFunction function;
};

GenericComplex read_generic(std::istream& in);
GenericComplex read_generic_file(const std::string& path);
void write_generic(std::ostream& out, const GenericComplex& data);

/// Filtration file: one line of reals per vertex, all lines of equal length.
VertexFunction read_vertex_function(std::istream& in, std::size_t vertex_count);
VertexFunction read_vertex_function_file(const std::string& path, std::size_t vertex_count);

}  // namespace mpmorse
