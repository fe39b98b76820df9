#include <gtest/gtest.h>

#include "cactusdim/cactus.hpp"
#include "cactusdim/enumerate.hpp"
#include "cactusdim/structural.hpp"
#include "oracle.hpp"

using namespace cactusdim;

TEST(CactusTest, Recognition) {
  EXPECT_TRUE(is_cactus(make::cycle(5)));
  EXPECT_TRUE(is_cactus(make::daisy({3, 4, 5})));
  EXPECT_TRUE(is_cactus(make::path(4)));
  EXPECT_FALSE(is_cactus(make::complete(4)));
  EXPECT_FALSE(is_cactus(make::complete_bipartite(2, 3)));
}

TEST(CactusTest, ProfileOfDaisy) {
  auto p = cactus_profile(make::daisy({4, 4}));
  ASSERT_EQ(p.c(), 2);
  EXPECT_EQ(p.L, 0);
  for (const auto& cyc : p.cycles) {
    EXPECT_EQ(cyc.girth(), 4);
    EXPECT_EQ(cyc.b(), 1);
    EXPECT_TRUE(cyc.end_cycle());
  }
  EXPECT_EQ(p.B, compute_B(p.cycles));
  EXPECT_EQ(p.shared_vertex(0, 1), 0);
}

TEST(CactusTest, ProfileRejectsNonCacti) {
  EXPECT_THROW(cactus_profile(make::complete(4)), not_cactus_error);
}

TEST(BbrTest, SmallestSetsOfHexagonAreAllPairs) {
  auto sets = enumerate_smallest_bbr(make::cycle(6));
  EXPECT_EQ(sets.size(), 15u);
  for (const auto& s : sets) EXPECT_EQ(s.set.size(), 2u);
}

TEST(BbrTest, SmallestSetsOfTwoSquares) {
  // one vertex off the centre on each petal: 3 x 3 choices
  auto sets = enumerate_smallest_bbr(make::daisy({4, 4}));
  EXPECT_EQ(sets.size(), 9u);
  for (const auto& s : sets) EXPECT_EQ(std::count(s.set.begin(), s.set.end(), 0), 0);
}

TEST(BbrTest, Membership) {
  Graph g = make::daisy({4, 4});  // petals 0-1-2-3 and 0-4-5-6
  std::vector<vertex_t> good{2, 5}, one_petal{1, 2}, centre{0, 2};
  EXPECT_TRUE(is_bbr(g, good));
  EXPECT_FALSE(is_bbr(g, one_petal));
  EXPECT_FALSE(is_bbr(g, centre));

  Graph star = make::star(3);
  std::vector<vertex_t> two{1, 2}, one{1};
  EXPECT_TRUE(is_bbr(star, two));
  EXPECT_FALSE(is_bbr(star, one));
  EXPECT_NE(is_bbr(star, one).reason.find("branch-resolving"), std::string::npos);
}

TEST(BbrTest, CapIsEnforced) {
  BbrOptions opt;
  opt.cap = 3;
  EXPECT_THROW(enumerate_smallest_bbr(make::cycle(6), opt), cap_exceeded_error);
}

TEST(StructuralTest, ThreePetalSquareDaisy) {
  auto d = structural_dimensions(make::daisy({4, 4, 4}));
  EXPECT_EQ(d.c, 3);
  EXPECT_EQ(d.L, 0);
  EXPECT_EQ(d.tau_vi, 2);
  EXPECT_EQ(d.dim_formula, 5);
  EXPECT_EQ(d.dim_formula, exact_dimension(make::daisy({4, 4, 4}), DimensionMode::vertex).size);
  EXPECT_EQ(d.edim_formula, exact_dimension(make::daisy({4, 4, 4}), DimensionMode::edge).size);
}

TEST(StructuralTest, CyclesGiveTwo) {
  for (int n = 3; n <= 9; ++n) {
    auto d = structural_dimensions(make::cycle(n));
    EXPECT_EQ(d.dim_formula, 2);
    EXPECT_EQ(d.edim_formula, 2);
  }
}

TEST(StructuralTest, FormulaMatchesBruteForceOnSmallCacti) {
  int checked = 0;
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n, {0, true, false})) {
      if (cyclomatic_number(g) == 0) continue;
      auto d = structural_dimensions(g);
      EXPECT_EQ(d.dim_formula, oracle::naive_dimension(g, 0)) << encode_graph6(g);
      EXPECT_EQ(d.edim_formula, oracle::naive_dimension(g, 1)) << encode_graph6(g);
      EXPECT_TRUE(is_bbr(g, d.nice_set_vertex.set));
      EXPECT_TRUE(is_bbr(g, d.nice_set_edge.set));
      ++checked;
    }
  EXPECT_GT(checked, 200);
}

TEST(StructuralTest, TreesAreOutOfScope) {
  EXPECT_THROW(structural_dimensions(make::star(3)), graph_error);
}

TEST(StructuralTest, MinimumGeneratorsOfCactiAreBbr) {
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n, {0, true, false})) {
      if (cyclomatic_number(g) == 0) continue;
      auto w = exact_dimension(g, DimensionMode::vertex);
      EXPECT_TRUE(is_bbr(g, w.set)) << encode_graph6(g);
    }
}

TEST(ExtremalTest, LeaflessCactiFlags) {
  auto even = extremal_classification(make::daisy({4, 6}));
  EXPECT_TRUE(even.leafless);
  EXPECT_TRUE(even.is_daisy);
  EXPECT_FALSE(even.has_odd_petal);
  EXPECT_TRUE(even.predicted_leafless_dim_equal);
  EXPECT_EQ(even.dim_exact, 3);
  EXPECT_EQ(even.edim_exact, 3);

  auto odd = extremal_classification(make::daisy({3, 4}));
  EXPECT_TRUE(odd.has_odd_petal);
  EXPECT_FALSE(odd.predicted_leafless_dim_equal);
  EXPECT_TRUE(odd.predicted_leafless_edim_equal);
  EXPECT_LT(odd.dim_exact, 3);
  EXPECT_EQ(odd.edim_exact, 3);

  // two squares joined through a middle square: leafless, not a daisy
  Graph chain(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {6, 7}, {7, 8}, {8, 9}, {9, 6}});
  auto c = extremal_classification(chain);
  EXPECT_TRUE(c.leafless);
  EXPECT_FALSE(c.is_daisy);
  EXPECT_FALSE(c.predicted_leafless_dim_equal);
  EXPECT_FALSE(c.predicted_leafless_edim_equal);
  EXPECT_LT(c.dim_exact, 5);
  EXPECT_LT(c.edim_exact, 5);
  EXPECT_TRUE(c.findings.empty());
}

TEST(ExtremalTest, NeedsTwoCycles) {
  EXPECT_THROW(extremal_classification(make::cycle(5)), graph_error);
}
