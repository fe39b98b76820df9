#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cactusdim {

/// Raised when an input graph or vertex set violates an operation's precondition.
class graph_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations that require a connected graph.
class not_connected_error : public graph_error {
 public:
  not_connected_error() : graph_error("graph is not connected") {}
};

/// Raised when a configured resource cap (pair universe, BBR stream, time budget) is hit.
class cap_exceeded_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using vertex_t = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  vertex_t u = 0;
  vertex_t v = 0;

  constexpr Edge() = default;
  constexpr Edge(vertex_t a, vertex_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(vertex_t x) const { return x == u || x == v; }
  constexpr vertex_t other(vertex_t x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  explicit Graph(int n) : Graph(n, {}) {}

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw graph_error("graph must have at least one vertex");
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) throw graph_error("edge endpoint out of range");
      if (e.u == e.v) throw graph_error("self-loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw graph_error("parallel edges are not allowed");
    }
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const vertex_t> neighbors(vertex_t v) const { return adj_[v]; }
  int degree(vertex_t v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(vertex_t a, vertex_t b) const {
    if (a == b) return false;
    const auto& row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  /// Position of edge {a,b} in edges(), or -1.
  int edge_index(vertex_t a, vertex_t b) const {
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<vertex_t>> adj_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<vertex_t> leaves;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.min_degree = g.degree(0);
  s.max_degree = g.degree(0);
  for (vertex_t v = 0; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
    if (g.degree(v) == 1) s.leaves.push_back(v);
  }
  return s;
}

inline int min_degree(const Graph& g) { return degree_stats(g).min_degree; }

/// Component id per vertex, ids assigned in order of smallest member.
inline std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (vertex_t s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    std::queue<vertex_t> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      vertex_t u = q.front();
      q.pop();
      for (vertex_t w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw not_connected_error();
}

/// Connected, every vertex of degree 2.
inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (vertex_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

inline bool is_path_graph(const Graph& g) {
  if (g.size() != g.order() - 1 || !is_connected(g)) return false;
  for (vertex_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const vertex_t> vertices) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.emplace_back(pos[e.u], pos[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

/// Graph on the given vertex list containing exactly the listed edges.
inline Graph edge_subgraph(std::span<const vertex_t> vertices, std::span<const Edge> edges) {
  std::vector<Edge> local;
  local.reserve(edges.size());
  auto index_of = [&](vertex_t v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return static_cast<int>(it - vertices.begin());
  };
  for (const Edge& e : edges) local.emplace_back(index_of(e.u), index_of(e.v));
  return Graph(static_cast<int>(vertices.size()), std::move(local));
}

/// Relabel: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), std::move(edges));
}

inline std::string to_string(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) s += ' ';
    first = false;
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s + "}";
}

namespace make {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
  if (n < 3) throw graph_error("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(e));
}

/// Cycles of the given lengths all sharing vertex 0 (the center).
inline Graph daisy(std::span<const int> petals) {
  std::vector<Edge> e;
  int next = 1;
  for (int len : petals) {
    if (len < 3) throw graph_error("petal length must be at least 3");
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 0);
  }
  return Graph(next, std::move(e));
}

inline Graph daisy(std::initializer_list<int> petals) {
  std::vector<int> p(petals);
  return daisy(std::span<const int>(p));
}

}  // namespace make

}  // namespace cactusdim
