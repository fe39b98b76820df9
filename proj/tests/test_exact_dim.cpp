#include <numeric>

#include <gtest/gtest.h>

#include "cactusdim/enumerate.hpp"
#include "cactusdim/exact_dim.hpp"
#include "oracle.hpp"

using namespace cactusdim;

namespace {

constexpr DimensionMode modes[] = {DimensionMode::vertex, DimensionMode::edge, DimensionMode::mixed};

int dim(const Graph& g, DimensionMode m = DimensionMode::vertex) { return exact_dimension(g, m).size; }

}  // namespace

TEST(ExactDimTest, AgreesWithBruteForceOnSmallGraphs) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (int k = 0; k < 3; ++k) {
        auto w = exact_dimension(g, modes[k]);
        ASSERT_EQ(w.size, oracle::naive_dimension(g, k)) << encode_graph6(g) << " mode " << k;
        EXPECT_EQ(static_cast<int>(w.set.size()), w.size);
        EXPECT_TRUE(is_generator(g, w.set, modes[k]));
      }
}

TEST(ExactDimTest, FrozenValues) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(dim(make::cycle(n)), 2);
    EXPECT_EQ(dim(make::cycle(n), DimensionMode::edge), 2);
  }
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(dim(make::path(n)), 1);
    EXPECT_EQ(dim(make::complete(n)), n - 1);
  }
  EXPECT_EQ(dim(make::star(4)), 3);
  EXPECT_EQ(dim(make::petersen()), 3);
  EXPECT_EQ(dim(make::petersen(), DimensionMode::edge), 4);
  EXPECT_EQ(dim(make::complete_bipartite(2, 3)), 3);
}

TEST(ExactDimTest, SingleVertexAndModes) {
  EXPECT_EQ(dim(Graph(1)), 0);
  EXPECT_EQ(parse_mode("edge"), DimensionMode::edge);
  EXPECT_EQ(to_string(DimensionMode::mixed), "mixed");
  EXPECT_THROW(parse_mode("both"), std::exception);
}

TEST(ExactDimTest, RejectsDisconnectedInput) {
  EXPECT_THROW(exact_dimension(Graph(3, {{0, 1}}), DimensionMode::vertex), graph_error);
}

TEST(ExactDimTest, PairCapIsEnforced) {
  SolverOptions opt;
  opt.pair_cap = 10;
  EXPECT_THROW(exact_dimension(make::petersen(), DimensionMode::vertex, opt), cap_exceeded_error);
}

TEST(ExactDimTest, UndistinguishedPairsExplainFailures) {
  Graph c4 = make::cycle(4);
  std::vector<vertex_t> s{0};
  auto pairs = undistinguished_pairs(c4, s, DimensionMode::vertex);
  ASSERT_EQ(pairs.size(), 1u);  // 1 and 3 are both at distance 1 from 0
  EXPECT_EQ(pairs[0].first.index, 1);
  EXPECT_EQ(pairs[0].second.index, 3);
  std::vector<vertex_t> adj{0, 1};
  EXPECT_TRUE(undistinguished_pairs(c4, adj, DimensionMode::vertex).empty());
  std::vector<vertex_t> opposite{0, 2};
  EXPECT_FALSE(is_generator(c4, opposite, DimensionMode::vertex));
}

TEST(ExactDimTest, InvariantUnderRelabeling) {
  Rng rng(11);
  for (const Graph& g : enumerate_graphs(6, {2, false, false})) {
    std::vector<vertex_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
    Graph h = relabel(g, perm);
    for (auto m : modes) EXPECT_EQ(dim(g, m), dim(h, m));
  }
}
