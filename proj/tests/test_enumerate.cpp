#include <set>

#include <gtest/gtest.h>

#include "cactusdim/canonical.hpp"
#include "cactusdim/cactus.hpp"
#include "cactusdim/enumerate.hpp"
#include "oracle.hpp"

using namespace cactusdim;

namespace {

long count(int n, GraphFilter f = {}) {
  long k = 0;
  for_each_graph(n, f, [&](const Graph&) { ++k; });
  return k;
}

}  // namespace

TEST(EnumerateTest, ConnectedGraphCounts) {
  const long expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count(n), expected[n - 1]) << n;
}

TEST(EnumerateTest, CactusCounts) {
  const long expected[] = {1, 1, 2, 4, 9, 23, 63, 188, 596, 1979};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(count(n, {0, true, false}), expected[n - 1]) << n;
}

TEST(EnumerateTest, MinDegreeFilter) {
  EXPECT_EQ(count(4, {2, false, false}), 3);
  EXPECT_EQ(count(4, {3, false, false}), 1);
  EXPECT_EQ(count(5, {2, false, true}), 10);  // 11 minus the pentagon
}

TEST(EnumerateTest, OrbitCountsMatchLabeledCounts) {
  // sum over isomorphism classes of n!/|Aut| counts labeled graphs
  auto check = [](int n, GraphFilter f) {
    long total = 0;
    auto graphs = enumerate_graphs(n, f);
    for (const Graph& g : graphs) total += oracle::factorial(n) / oracle::count_isomorphisms(g, g);
    EXPECT_EQ(total, oracle::count_labeled(n, [&](const Graph& g) { return f.accepts(g); })) << n;
    std::set<std::string> keys;
    for (const Graph& g : graphs) keys.insert(canonical_form(g).key);
    EXPECT_EQ(keys.size(), graphs.size());
  };
  for (int n = 2; n <= 6; ++n) {
    check(n, {});
    check(n, {2, false, false});
    check(n, {0, true, false});
  }
}

TEST(EnumerateTest, CapIsEnforced) {
  EXPECT_THROW(enumerate_graphs(builtin_max_order + 1), graph_error);
  EXPECT_THROW(enumerate_graphs(builtin_max_cactus_order + 1, {0, true, false}), graph_error);
}

TEST(CanonicalTest, InvariantUnderRelabeling) {
  Rng rng(5);
  for (int n = 5; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      std::vector<vertex_t> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
      EXPECT_EQ(canonical_form(g).key, canonical_form(relabel(g, perm)).key);
    }
}

TEST(CanonicalTest, DistinguishesNonIsomorphicGraphs) {
  EXPECT_FALSE(isomorphic(make::cycle(6), make::daisy({3, 4})));
  EXPECT_TRUE(isomorphic(make::petersen(), relabel(make::petersen(), std::vector<vertex_t>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
  // same degree sequence, different graphs: C6 and two triangles
  EXPECT_FALSE(isomorphic(make::cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(RandomTest, Deterministic) {
  EXPECT_EQ(random_min_degree_graph(9, 14, 42), random_min_degree_graph(9, 14, 42));
  EXPECT_EQ(random_block_glued_graph(12, 7), random_block_glued_graph(12, 7));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  Rng a(3), b(3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(0, 9), b.uniform(0, 9));
}

TEST(RandomTest, MinDegreeGraphs) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = random_min_degree_graph(8, 12, s);
    EXPECT_EQ(g.order(), 8);
    EXPECT_EQ(g.size(), 12);
    EXPECT_GE(min_degree(g), 2);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(RandomTest, InfeasibleParameters) {
  EXPECT_THROW(random_min_degree_graph(6, 5, 1), graph_error);
  EXPECT_THROW(random_min_degree_graph(4, 7, 1), graph_error);
  EXPECT_THROW(random_min_degree_graph(2, 2, 1), graph_error);
}

TEST(RandomTest, BlockGluedGraphs) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = random_block_glued_graph(14, derive_seed(9, s));
    EXPECT_LE(g.order(), 14);
    EXPECT_GE(min_degree(g), 2);
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(block_decomposition(g).cut_vertices.empty());
  }
}
