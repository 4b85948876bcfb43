#include <gtest/gtest.h>

#include <sstream>

#include "mpmorse/error.hpp"
#include "mpmorse/io.hpp"
#include "mpmorse/synthetic.hpp"

using namespace mpmorse;

TEST(ReadOff, TriangleAndQuad) {
  std::istringstream in(R"(OFF
# a square and a triangle
5 2 0
0 0 0
1 0 0
1 1 0
0 1 0
2 0 1.5
4 0 1 2 3
3 1 4 2
)");
  auto mesh = read_off(in);
  ASSERT_EQ(mesh.points.size(), 5u);
  EXPECT_DOUBLE_EQ(mesh.points[4][2], 1.5);
  ASSERT_EQ(mesh.faces.size(), 3u);
  EXPECT_EQ(mesh.faces[0], (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(mesh.faces[1], (std::vector<VertexId>{0, 2, 3}));
  EXPECT_EQ(mesh.faces[2], (std::vector<VertexId>{1, 4, 2}));
}

TEST(ReadOff, CountsOnHeaderLine) {
  std::istringstream in("OFF 3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  auto mesh = read_off(in);
  EXPECT_EQ(mesh.points.size(), 3u);
  EXPECT_EQ(mesh.faces.size(), 1u);
}

TEST(ReadOff, Errors) {
  std::istringstream no_header("3 1 0\n0 0 0\n");
  EXPECT_THROW(read_off(no_header), ParseError);
  std::istringstream short_file("OFF\n3 1 0\n0 0 0\n");
  EXPECT_THROW(read_off(short_file), ParseError);
  std::istringstream bad_index("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n");
  EXPECT_THROW(read_off(bad_index), ParseError);
  std::istringstream bad_number("OFF\n3 1 0\n0 0 0\n1 zero 0\n0 1 0\n3 0 1 2\n");
  EXPECT_THROW(read_off(bad_number), ParseError);
  EXPECT_THROW(read_off_file("/nonexistent/mesh.off"), ParseError);
}

TEST(ReadOff, RoundTrip) {
  auto mesh = make_torus(4, 5);
  std::stringstream ss;
  write_off(ss, mesh);
  auto back = read_off(ss);
  EXPECT_EQ(back.points, mesh.points);
  EXPECT_EQ(back.faces, mesh.faces);
}

TEST(CoordinateFunction, SelectsColumns) {
  Mesh mesh{{{1, 2, 3}, {4, 5, 6}}, {}};
  auto cols = parse_coordinate_columns("z,x");
  EXPECT_EQ(cols, (std::vector<std::size_t>{2, 0}));
  auto f = coordinate_function(mesh, cols);
  EXPECT_EQ(f, (VertexFunction{{3, 1}, {6, 4}}));
  EXPECT_THROW(parse_coordinate_columns("x,w"), std::invalid_argument);
  EXPECT_THROW(parse_coordinate_columns(""), std::invalid_argument);
}

TEST(Generic, ReadT1) {
  std::istringstream in("3 1 2  # header\n0 5\n1 4\n2 3\n0 1 2\n");
  auto g = read_generic(in);
  EXPECT_EQ(g.vertex_count, 3u);
  ASSERT_EQ(g.top_simplices.size(), 1u);
  EXPECT_EQ(g.top_simplices[0], (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(g.function, (VertexFunction{{0, 5}, {1, 4}, {2, 3}}));
}

TEST(Generic, RoundTrip) {
  GenericComplex g{4, {{0, 1, 2}, {2, 3}}, VertexFunction{{0.25, 1}, {1, -3}, {2, 2.5}, {3, 0}}};
  std::stringstream ss;
  write_generic(ss, g);
  auto back = read_generic(ss);
  EXPECT_EQ(back.vertex_count, g.vertex_count);
  EXPECT_EQ(back.top_simplices, g.top_simplices);
  EXPECT_EQ(back.function, g.function);
}

TEST(Generic, Errors) {
  std::istringstream wrong_arity("2 1 2\n0 1\n1\n0 1\n");
  EXPECT_THROW(read_generic(wrong_arity), ParseError);
  std::istringstream missing_lines("3 1 2\n0 5\n1 4\n");
  EXPECT_THROW(read_generic(missing_lines), ParseError);
  std::istringstream bad_vertex("2 1 1\n0\n1\n0 2\n");
  EXPECT_THROW(read_generic(bad_vertex), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_generic(empty), ParseError);
}

TEST(VertexFunctionFile, Reads) {
  std::istringstream in("0 1 2\n3 4 5\n");
  auto f = read_vertex_function(in, 2);
  EXPECT_EQ(f.parameters(), 3u);
  EXPECT_EQ(f(1, 2), 5.0);
  std::istringstream ragged("0 1\n3\n");
  EXPECT_THROW(read_vertex_function(ragged, 2), ParseError);
  std::istringstream too_few("0 1\n");
  EXPECT_THROW(read_vertex_function(too_few, 2), ParseError);
}

TEST(Synthetic, TorusSizeAndInjectivity) {
  auto mesh = make_torus(10, 12);
  auto c = build_complex(mesh.points.size(), mesh.faces);
  EXPECT_EQ(c.size(), 6u * 10 * 12);
  EXPECT_EQ(static_cast<long>(c.count(0)) - static_cast<long>(c.count(1)) +
                static_cast<long>(c.count(2)),
            0);
  auto cols = parse_coordinate_columns("x,y,z");
  EXPECT_FALSE(find_injectivity_violation(coordinate_function(mesh, cols)));
  EXPECT_THROW(make_torus(2, 5), std::invalid_argument);
}

TEST(Synthetic, GridIsADisk) {
  auto mesh = make_grid(4, 5);
  auto c = build_complex(mesh.points.size(), mesh.faces);
  EXPECT_EQ(c.count(0), 20u);
  EXPECT_EQ(c.count(2), 2u * 3 * 4);
  EXPECT_EQ(static_cast<long>(c.count(0)) - static_cast<long>(c.count(1)) +
                static_cast<long>(c.count(2)),
            1);
}
