// Deliberately naive reference implementations used to cross-check the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "cactusdim/graph.hpp"

namespace oracle {

using cactusdim::Edge;
using cactusdim::Graph;

inline std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Edge& e : g.edges()) {
        if (!e.has(u)) continue;
        int w = e.other(u);
        if (d[s][w] < 0) {
          d[s][w] = d[s][u] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

/// Smallest generator size by trying every subset in increasing size.
/// mode: 0 vertices, 1 edges, 2 vertices and edges.
inline int naive_dimension(const Graph& g, int mode) {
  auto d = bfs_distances(g);
  int n = g.order();
  // distance vectors of all items to every vertex
  std::vector<std::vector<int>> items;
  if (mode != 1)
    for (int v = 0; v < n; ++v) items.push_back(d[v]);
  if (mode != 0)
    for (const Edge& e : g.edges()) {
      std::vector<int> row(n);
      for (int s = 0; s < n; ++s) row[s] = std::min(d[e.u][s], d[e.v][s]);
      items.push_back(row);
    }
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::vector<int>> coords;
      for (const auto& it : items) {
        std::vector<int> c;
        for (int s : pick) c.push_back(it[s]);
        coords.push_back(c);
      }
      std::sort(coords.begin(), coords.end());
      if (std::adjacent_find(coords.begin(), coords.end()) == coords.end()) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

/// Independent graph6 decoder (small orders only), bit by bit.
inline Graph decode_graph6(const std::string& s) {
  int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.at(k++)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline bool connected(int n, const std::vector<std::vector<bool>>& adj) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (adj[u][w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

/// Number of permutations mapping a onto b (|Aut| when a == b).
inline long count_isomorphisms(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return 0;
  int n = a.order();
  auto A = adjacency(a), B = adjacency(b);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (const Edge& e : a.edges())
      if (!B[p[e.u]][p[e.v]]) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Labeled graphs on n vertices passing `keep`, counted by brute force over all edge subsets.
template <class Pred>
long count_labeled(int n, Pred keep) {
  std::vector<Edge> all;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) all.emplace_back(i, j);
  long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) {
        adj[all[k].u][all[k].v] = adj[all[k].v][all[k].u] = true;
        edges.push_back(all[k]);
      }
    if (!connected(n, adj)) continue;
    if (keep(Graph(n, edges))) ++count;
  }
  return count;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
