#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "mpmorse/error.hpp"
#include "mpmorse/morse.hpp"
#include "mpmorse/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_complex.hpp"
#include "support/reference.hpp"

using namespace mpmorse;
using mpmorse::testing::E1;
using mpmorse::testing::T1;

using Cells = std::vector<CellId>;

namespace {

LefschetzComplex morse_of(const SimplicialComplex& c, const MultiFiltration& mf, unsigned workers = 1) {
  return extract_morse_complex(compute_discrete_gradient(c, mf), c, mf, workers);
}

std::vector<Cells> facet_lists(const LefschetzComplex& m) {
  std::vector<Cells> out;
  for (CellId c = 0; c < m.size(); ++c) out.emplace_back(m.facets(c).begin(), m.facets(c).end());
  return out;
}

/// Number of V-paths from the facets of t down to s, by plain recursion.
std::size_t count_separatrices(const DiscreteGradient& g, const SimplicialComplex& c, SimplexId t,
                               SimplexId s) {
  std::function<std::size_t(SimplexId)> walk = [&](SimplexId x) -> std::size_t {
    if (x == s) return 1;
    if (g.role(x) != DiscreteGradient::Role::tail) return 0;
    std::size_t n = 0;
    for (SimplexId y : c.facets(g.partner(x)))
      if (y != x) n += walk(y);
    return n;
  };
  std::size_t n = 0;
  for (SimplexId f : c.facets(t)) n += walk(f);
  return n;
}

struct Circle {
  SimplicialComplex c = build_complex(3, {{0, 1}, {1, 2}, {0, 2}});
  SimplexId id(std::initializer_list<VertexId> vs) const { return c.id_of(Simplex(vs)); }
};

}  // namespace

TEST(ExtractMorseComplex, T1) {
  T1 t;
  auto m = morse_of(t.c, t.mf);
  ASSERT_EQ(m.size(), 5u);
  // Cells follow simplex ids: a, b, c, ab, bc.
  EXPECT_EQ(m.dimension(3), 1);
  EXPECT_EQ(std::vector<VertexId>(m.key(3).begin(), m.key(3).end()), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(std::vector<VertexId>(m.key(4).begin(), m.key(4).end()), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(facet_lists(m), (std::vector<Cells>{{}, {}, {}, {0, 1}, {1, 2}}));
  EXPECT_TRUE(m.incidence(3, 0));
  EXPECT_FALSE(m.incidence(3, 2));
  EXPECT_EQ(std::vector<double>(m.grade(4).begin(), m.grade(4).end()), (std::vector<double>{2, 4}));
}

TEST(ExtractMorseComplex, E1) {
  E1 e;
  auto m = morse_of(e.c, e.mf);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.dimension(0), 0);
  EXPECT_TRUE(m.facets(0).empty());
}

TEST(ExtractMorseComplex, CircleWithIncreasingFunction) {
  Circle circle;
  const auto& c = circle.c;
  auto mf = extend_filtration(c, VertexFunction{{0, 0}, {1, 1}, {2, 2}});
  auto g = compute_discrete_gradient(c, mf);
  EXPECT_EQ(g.sorted_criticals(), (std::vector<SimplexId>{0, circle.id({1, 2})}));
  EXPECT_EQ(count_separatrices(g, c, circle.id({1, 2}), 0), 2u);

  auto m = extract_morse_complex(g, c, mf);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.facets(1).empty());
  EXPECT_EQ(betti_numbers_f2(m), (std::vector<std::size_t>{1, 1}));
}

TEST(ExtractMorseComplex, CircleWithOpposedComponents) {
  // Every simplex gets its own grade, so nothing can be paired.
  Circle circle;
  const auto& c = circle.c;
  auto mf = extend_filtration(c, VertexFunction{{0, 3}, {1, 2}, {2, 1}});
  auto m = morse_of(c, mf);
  ASSERT_EQ(m.size(), 6u);
  auto s = simplicial_lefschetz(c, mf);
  EXPECT_EQ(facet_lists(m), facet_lists(s));
}

TEST(ExtractMorseComplex, ClosedPathThrows) {
  auto c = build_complex(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
  auto mf = extend_filtration(c, VertexFunction(1, {0, 1, 2, 3, 4}));
  auto id = [&](std::initializer_list<VertexId> vs) { return c.id_of(Simplex(vs)); };
  DiscreteGradient g(c.size());
  g.add_pair(0, id({0, 1}));
  g.add_pair(1, id({1, 2}));
  g.add_pair(2, id({2, 3}));
  g.add_pair(3, id({0, 3}));
  g.add_critical(4);
  g.add_critical(id({0, 4}));
  EXPECT_THROW(extract_morse_complex(g, c, mf), InvalidGradient);
}

TEST(BoundaryMatrix, T1Morse) {
  T1 t;
  auto d = boundary_matrix(morse_of(t.c, t.mf), 1);
  ASSERT_EQ(d.rows, 3u);
  ASSERT_EQ(d.cols(), 2u);
  EXPECT_EQ(d.row_labels, (Cells{0, 1, 2}));
  EXPECT_EQ(d.column_labels, (Cells{3, 4}));
  std::vector<std::vector<bool>> dense(3, std::vector<bool>(2));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) dense[r][c] = d.at(r, c);
  EXPECT_EQ(dense, (std::vector<std::vector<bool>>{{1, 0}, {1, 1}, {0, 1}}));
}

TEST(BoundaryMatrix, NoCellsOfThatDimension) {
  T1 t;
  auto d = boundary_matrix(morse_of(t.c, t.mf), 2);
  EXPECT_EQ(d.cols(), 0u);
}

TEST(BoundaryMatrix, SimplicialTriangle) {
  T1 t;
  auto m = simplicial_lefschetz(t.c, t.mf);
  auto d = boundary_matrix(m, 2);
  EXPECT_EQ(d.row_labels, (Cells{t.id({0, 1}), t.id({0, 2}), t.id({1, 2})}));
  ASSERT_EQ(d.cols(), 1u);
  EXPECT_EQ(d.columns[0], (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_TRUE(multiply(boundary_matrix(m, 1), d).columns[0].empty());
}

TEST(BettiNumbers, Examples) {
  T1 t;
  EXPECT_EQ(betti_numbers_f2(morse_of(t.c, t.mf)), (std::vector<std::size_t>{1, 0}));

  Circle circle;
  auto mf = extend_filtration(circle.c, VertexFunction{{0, 3}, {1, 2}, {2, 1}});
  EXPECT_EQ(betti_numbers_f2(simplicial_lefschetz(circle.c, mf)), (std::vector<std::size_t>{1, 1}));

  auto point = build_complex(1, {{0}});
  auto pf = extend_filtration(point, VertexFunction{{0, 0}});
  EXPECT_EQ(betti_numbers_f2(simplicial_lefschetz(point, pf)), (std::vector<std::size_t>{1}));
}

TEST(BettiNumbers, CorruptComplexThrows) {
  LefschetzComplex m(1);
  std::vector<double> g{0};
  auto a = m.add_cell(0, g, {0});
  auto b = m.add_cell(0, g, {1});
  auto e = m.add_cell(1, g, {0, 1});
  auto f = m.add_cell(2, g, {0, 1, 2});
  m.set_facets(e, {a, b});
  m.set_facets(f, {e});
  EXPECT_FALSE(boundary_squares_to_zero(m));
  EXPECT_THROW(betti_numbers_f2(m), CorruptComplex);
}

TEST(LefschetzComplex, RejectsBadIncidence) {
  LefschetzComplex m(1);
  std::vector<double> g{0};
  auto a = m.add_cell(0, g, {0});
  auto f = m.add_cell(2, g, {0, 1, 2});
  EXPECT_THROW(m.set_facets(f, {a}), std::invalid_argument);
  auto e = m.add_cell(1, g, {0, 1});
  EXPECT_THROW(m.set_facets(e, {a, a}), std::invalid_argument);
  EXPECT_THROW(m.set_facets(e, {42}), std::out_of_range);
}

TEST(MorseDump, RoundTrip) {
  T1 t;
  auto m = morse_of(t.c, t.mf);
  std::stringstream ss;
  write_morse_complex(ss, m);
  EXPECT_EQ(ss.str(),
            "CELL 0 dim=0 grade=0,5\nCELL 1 dim=0 grade=1,4\nCELL 2 dim=0 grade=2,3\n"
            "CELL 3 dim=1 grade=1,5\nCELL 4 dim=1 grade=2,4\n"
            "INC 3 0\nINC 3 1\nINC 4 1\nINC 4 2\n");
  auto back = read_morse_complex(ss);
  EXPECT_EQ(facet_lists(back), facet_lists(m));
  EXPECT_EQ(betti_numbers_f2(back), betti_numbers_f2(m));
  std::istringstream bad("CELL 0 dim=0 grade=0,0\nINC 0 3\n");
  EXPECT_THROW(read_morse_complex(bad), ParseError);
}

class MorseProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MorseProperties, HomologyAndStructure) {
  auto inst = mpmorse::testing::random_instance(GetParam(), 200);
  const auto& c = inst.complex;
  auto m = morse_of(c, inst.filtration);
  EXPECT_TRUE(boundary_squares_to_zero(m)) << inst.label;
  EXPECT_TRUE(incidence_is_monotone(m)) << inst.label;
  auto expected = mpmorse::testing::reference_betti(c);
  auto got = betti_numbers_f2(m);
  got.resize(expected.size(), 0);
  EXPECT_EQ(got, expected) << inst.label;
  EXPECT_EQ(betti_numbers_f2(simplicial_lefschetz(c, inst.filtration)), expected) << inst.label;
}

TEST_P(MorseProperties, SeparatrixParityMatchesEnumeration) {
  auto inst = mpmorse::testing::random_instance(GetParam(), 40);
  const auto& c = inst.complex;
  auto g = compute_discrete_gradient(c, inst.filtration);
  auto m = extract_morse_complex(g, c, inst.filtration, 1);
  auto simplex_of = g.sorted_criticals();
  std::vector<std::pair<SimplexId, SimplexId>> got;
  for (CellId t = 0; t < m.size(); ++t)
    for (CellId s : m.facets(t)) got.emplace_back(simplex_of[t], simplex_of[s]);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, oracle::enumerate_separatrix_parity(g, c)) << inst.label;
  for (auto [t, s] : got) EXPECT_EQ(count_separatrices(g, c, t, s) % 2, 1u);
}

TEST_P(MorseProperties, IndependentOfWorkers) {
  auto inst = mpmorse::testing::random_instance(GetParam(), 200);
  std::stringstream a, b;
  write_morse_complex(a, morse_of(inst.complex, inst.filtration, 1));
  write_morse_complex(b, morse_of(inst.complex, inst.filtration, 4));
  EXPECT_EQ(a.str(), b.str());
}

INSTANTIATE_TEST_SUITE_P(Random, MorseProperties, ::testing::Range<std::uint64_t>(0, 60));
