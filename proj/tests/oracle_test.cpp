#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "mpmorse/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_complex.hpp"
#include "support/reference.hpp"

using namespace mpmorse;
using namespace mpmorse::oracle;
using mpmorse::testing::E1;
using mpmorse::testing::T1;

using Ids = std::vector<SimplexId>;

namespace {

std::size_t grade_index(const GradePoset& p, std::vector<double> g) {
  auto it = std::find(p.grades.begin(), p.grades.end(), g);
  EXPECT_NE(it, p.grades.end());
  return static_cast<std::size_t>(it - p.grades.begin());
}

std::vector<Ids> sorted_sets(std::vector<Ids> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

TEST(GlobalIndexing, T1StartsWithA) {
  T1 t;
  auto j = build_global_indexing(t.c, t.mf, compute_indexing(t.mf, 3));
  EXPECT_EQ(j.position[t.id({0})], 0u);
  EXPECT_EQ(j.order.size(), t.c.size());
}

TEST(GlobalIndexing, StrictGradeOrder) {
  E1 e;
  auto j = build_global_indexing(e.c, e.mf, compute_indexing(e.mf, 2));
  EXPECT_LT(j.position[0], j.position[1]);
}

TEST(GlobalIndexing, TieBreakOnIncomparableGrades) {
  auto c = build_complex(2, {{0}, {1}});
  auto mf = extend_filtration(c, VertexFunction{{0, 1}, {1, 0}});
  auto j = build_global_indexing(c, mf, compute_indexing(mf, 2));
  EXPECT_LT(j.position[0], j.position[1]);
}

TEST(MatchingGlobal, T1) {
  T1 t;
  auto g = matching_gradient(t.c, t.mf);
  ASSERT_EQ(g.pairs().size(), 1u);
  EXPECT_EQ(g.pairs()[0], std::make_pair(t.id({0, 2}), t.id({0, 1, 2})));
  EXPECT_EQ(g.sorted_criticals(), (Ids{t.id({0}), t.id({1}), t.id({2}), t.id({0, 1}), t.id({1, 2})}));
  EXPECT_EQ(g, compute_discrete_gradient(t.c, t.mf));
}

TEST(MatchingGlobal, E1) {
  E1 e;
  auto idx = compute_indexing(e.mf, 2);
  auto trace = matching_global(e.c, e.mf, build_global_indexing(e.c, e.mf, idx), IndexLexOrder(e.c, idx));
  EXPECT_EQ(trace.primaries, (Ids{e.id({0}), e.id({1})}));
  EXPECT_EQ(trace.lower_stars, (std::vector<Ids>{{e.id({0})}, {e.id({1}), e.id({0, 1})}}));
  EXPECT_EQ(trace.gradient.sorted_criticals(), Ids{e.id({0})});
  EXPECT_EQ(trace.gradient.partner(e.id({1})), e.id({0, 1}));
}

TEST(MatchingGlobal, SingleVertex) {
  auto c = build_complex(1, {{0}});
  auto mf = extend_filtration(c, VertexFunction{{3, 3}});
  EXPECT_EQ(matching_gradient(c, mf).sorted_criticals(), Ids{0});
}

TEST(FiltrationLowerStar, T1) {
  T1 t;
  EXPECT_EQ(filtration_lower_star(t.c, t.mf, t.id({0, 2})), (Ids{t.id({0, 2}), t.id({0, 1, 2})}));
  EXPECT_EQ(filtration_lower_star(t.c, t.mf, t.id({0})), Ids{t.id({0})});
  EXPECT_EQ(filtration_lower_star(t.c, t.mf, t.id({1})), Ids{t.id({1})});
}

TEST(PartitionEquivalence, T1) {
  T1 t;
  auto report = check_partition_equivalence(t.c, t.mf);
  EXPECT_TRUE(report.ok()) << report.detail;
  auto idx = compute_indexing(t.mf, 3);
  auto trace = matching_global(t.c, t.mf, build_global_indexing(t.c, t.mf, idx), IndexLexOrder(t.c, idx));
  auto primaries = trace.primaries;
  std::sort(primaries.begin(), primaries.end());
  EXPECT_EQ(primaries, (Ids{t.id({0}), t.id({1}), t.id({2}), t.id({0, 1}), t.id({0, 2}), t.id({1, 2})}));
  EXPECT_EQ(sorted_sets(trace.lower_stars),
            sorted_sets({{t.id({0})}, {t.id({1})}, {t.id({0, 1})}, {t.id({2})}, {t.id({1, 2})},
                         {t.id({0, 2}), t.id({0, 1, 2})}}));
}

TEST(PartitionEquivalence, SmallCases) {
  E1 e;
  EXPECT_TRUE(verify_partition_equivalence(e.c, e.mf));
  auto c = build_complex(1, {{0}});
  EXPECT_TRUE(verify_partition_equivalence(c, extend_filtration(c, VertexFunction{{0, 0}})));
}

TEST(GradePoset, T1RealizedGradesAreJoinClosed) {
  T1 t;
  auto poset = build_grade_poset(simplicial_lefschetz(t.c, t.mf));
  EXPECT_EQ(poset.parameters, 2u);
  EXPECT_EQ(poset.grades, (std::vector<std::vector<double>>{{0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
}

TEST(GradePoset, AddsJoins) {
  auto c = build_complex(2, {{0}, {1}});
  auto mf = extend_filtration(c, VertexFunction{{0, 1}, {1, 0}});
  auto poset = build_grade_poset(simplicial_lefschetz(c, mf));
  EXPECT_EQ(poset.grades, (std::vector<std::vector<double>>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(RankInvariant, T1SurvivingComponent) {
  T1 t;
  auto m = simplicial_lefschetz(t.c, t.mf);
  auto poset = build_grade_poset(m);
  auto r = rank_invariant_bruteforce(m, poset, 2);
  EXPECT_EQ(r.rank(0, grade_index(poset, {1, 4}), grade_index(poset, {2, 5})), 1u);
  // a's component survives as well.
  EXPECT_EQ(r.rank(0, grade_index(poset, {0, 5}), grade_index(poset, {2, 5})), 1u);
  EXPECT_THROW(r.rank(0, grade_index(poset, {2, 5}), grade_index(poset, {0, 5})), std::out_of_range);
  std::ostringstream csv;
  write_rank_invariant_csv(csv, r, poset);
  EXPECT_EQ(csv.str().rfind("dim,u,v,rank\n", 0), 0u);
  EXPECT_NE(csv.str().find("\n0,1;4,2;5,1\n"), std::string::npos);
}

TEST(RankInvariant, DiagonalIsBettiOfSublevel) {
  auto inst = mpmorse::testing::random_instance(7, 60);
  const auto& c = inst.complex;
  auto m = simplicial_lefschetz(c, inst.filtration);
  auto poset = build_grade_poset(m);
  auto r = rank_invariant_bruteforce(m, poset, c.dimension());
  for (std::size_t u = 0; u < poset.grades.size(); ++u) {
    std::vector<bool> members(c.size());
    for (SimplexId s = 0; s < c.size(); ++s)
      members[s] = precedes(inst.filtration.grade(s), poset.grades[u]);
    auto betti = mpmorse::testing::reference_betti(c, members);
    for (int k = 0; k <= c.dimension(); ++k) EXPECT_EQ(r.rank(k, u, u), betti[k]);
  }
}

TEST(RankInvariant, EmptySublevelHasRankZero) {
  T1 t;
  auto m = simplicial_lefschetz(t.c, t.mf);
  GradePoset poset{2, {{-1, -1}, {2, 5}}};
  auto r = rank_invariant_bruteforce(m, poset, 2);
  for (int k = 0; k <= 2; ++k) {
    EXPECT_EQ(r.rank(k, 0, 0), 0u);
    EXPECT_EQ(r.rank(k, 0, 1), 0u);
  }
  EXPECT_EQ(r.rank(0, 1, 1), 1u);
}

TEST(RankInvariant, SizeGuard) {
  LefschetzComplex m(1);
  std::vector<double> g{0};
  for (std::size_t i = 0; i <= kRankInvariantCellLimit; ++i)
    m.add_cell(0, g, {static_cast<VertexId>(i)});
  EXPECT_THROW(rank_invariant_bruteforce(m), std::length_error);
}

TEST(SeparatrixParity, T1) {
  T1 t;
  auto g = compute_discrete_gradient(t.c, t.mf);
  using P = std::pair<SimplexId, SimplexId>;
  EXPECT_EQ(enumerate_separatrix_parity(g, t.c),
            (std::vector<P>{{t.id({0, 1}), t.id({0})}, {t.id({0, 1}), t.id({1})},
                            {t.id({1, 2}), t.id({1})}, {t.id({1, 2}), t.id({2})}}));
}

class OracleProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleProperties, MatchingAgreesWithLocalAlgorithm) {
  auto inst = mpmorse::testing::random_instance(GetParam(), 200);
  const auto& c = inst.complex;
  const auto& mf = inst.filtration;
  auto idx = compute_indexing(mf, c.vertex_count());
  auto j = build_global_indexing(c, mf, idx);
  // J is a linear extension of both relations.
  for (SimplexId a = 0; a < c.size(); ++a)
    for (SimplexId b = 0; b < c.size(); ++b)
      if (a != b && (c.is_face(a, b) || strictly_precedes(mf.grade(a), mf.grade(b))))
        ASSERT_LT(j.position[a], j.position[b]) << inst.label;

  auto report = check_partition_equivalence(c, mf);
  EXPECT_TRUE(report.ok()) << inst.label << ": " << report.detail;
  EXPECT_EQ(matching_gradient(c, mf), compute_discrete_gradient(c, mf)) << inst.label;
}

TEST_P(OracleProperties, RankInvariantSurvivesReduction) {
  auto inst = mpmorse::testing::random_instance(GetParam(), 60);
  const auto& c = inst.complex;
  auto original = simplicial_lefschetz(c, inst.filtration);
  auto morse = extract_morse_complex(compute_discrete_gradient(c, inst.filtration), c, inst.filtration, 1);
  auto poset = build_grade_poset(original);
  int top = original.max_dimension();
  auto a = rank_invariant_bruteforce(original, poset, top);
  auto b = rank_invariant_bruteforce(morse, poset, top);
  EXPECT_FALSE(a.entries().empty());
  EXPECT_EQ(a, b) << inst.label;
}

INSTANTIATE_TEST_SUITE_P(Random, OracleProperties, ::testing::Range<std::uint64_t>(0, 40));
