// Isomorph-free generation of small connected graphs by canonical vertex augmentation,
// and seeded random graph models.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "cactus.hpp"
#include "canonical.hpp"
#include "graph.hpp"

namespace cactusdim {

struct GraphFilter {
  int min_degree = 0;  // 0, 2 or 3 in practice
  bool cactus_only = false;
  bool exclude_cycles = false;

  bool accepts(const Graph& g) const {
    if (min_degree > 0 && cactusdim::min_degree(g) < min_degree) return false;
    if (exclude_cycles && is_cycle_graph(g)) return false;
    if (cactus_only && !is_cactus(g)) return false;
    return is_connected(g);
  }
};

inline constexpr int builtin_max_order = 10;
inline constexpr int builtin_max_cactus_order = 12;

namespace detail {

class Augmenter {
 public:
  Augmenter(int n, const GraphFilter& filter, const std::function<void(const Graph&)>& visit)
      : target_(n), filter_(filter), visit_(visit) {}

  void run() { grow(Graph(1)); }

 private:
  void grow(const Graph& parent) {
    int n = parent.order();
    if (n == target_) {
      if (filter_.accepts(parent)) visit_(parent);
      return;
    }
    std::set<std::string> seen;
    std::vector<Graph> children;
    int max_nb = filter_.cactus_only ? 2 : n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > max_nb) continue;
      std::vector<Edge> edges(parent.edges().begin(), parent.edges().end());
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) edges.emplace_back(v, n);
      Graph child(n + 1, std::move(edges));
      if (filter_.cactus_only && !is_cactus(child)) continue;
      CanonicalForm cf = canonical_form(child);
      // Reject non-canonical extensions first; another mask may yield the same child canonically.
      if (!is_canonical_extension(child, cf)) continue;
      if (!seen.insert(cf.key).second) continue;
      children.push_back(std::move(cf.graph));
    }
    for (const Graph& c : children) grow(c);
  }

  // The new vertex (index n-1) must be equivalent to the non-cut vertex of largest canonical label.
  static bool is_canonical_extension(const Graph& child, const CanonicalForm& cf) {
    int n = child.order();
    auto dec = block_decomposition(child);
    vertex_t best = -1;
    for (vertex_t v = 0; v < n; ++v) {
      if (dec.is_cut_vertex(v)) continue;
      if (best < 0 || cf.label[v] > cf.label[best]) best = v;
    }
    vertex_t x = n - 1;
    if (best == x) return true;
    if (child.degree(best) != child.degree(x)) return false;
    std::vector<int> cx(static_cast<std::size_t>(n), 1), cb(static_cast<std::size_t>(n), 1);
    cx[x] = 0;
    cb[best] = 0;
    return canonical_form(child, cx).key == canonical_form(child, cb).key;
  }

  int target_;
  const GraphFilter& filter_;
  const std::function<void(const Graph&)>& visit_;
};

}  // namespace detail

/// Visits one canonically labeled representative of every isomorphism class of connected
/// graphs on n vertices accepted by `filter`, in a deterministic order.
inline void for_each_graph(int n, const GraphFilter& filter, const std::function<void(const Graph&)>& visit) {
  int cap = filter.cactus_only ? builtin_max_cactus_order : builtin_max_order;
  if (n < 1) throw graph_error("order must be positive");
  if (n > cap)
    throw graph_error("builtin enumeration supports n <= " + std::to_string(cap) +
                      " for this filter; supply a graph6 file instead");
  detail::Augmenter(n, filter, visit).run();
}

inline std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter = {}) {
  std::vector<Graph> out;
  for_each_graph(n, filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Random models. std::mt19937_64 is fully specified by the standard; the distributions
// are not, so bounded draws are done here to keep output identical across toolchains.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return lo + static_cast<int>(r % range);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Seed for the i-th item of a seeded batch (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct RandomOptions {
  int max_attempts = 200'000;
};

/// Samples m-edge graphs on n vertices until one is connected with min degree >= 2.
/// Not uniform over the conditioned class.
inline Graph random_min_degree_graph(int n, int m, std::uint64_t seed, const RandomOptions& opt = {}) {
  if (n < 3) throw graph_error("min degree 2 needs at least 3 vertices");
  long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n) throw graph_error("a connected graph with min degree 2 needs m >= n");
  if (m > max_m) throw graph_error("m exceeds n(n-1)/2");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    for (int i = 0; i < m; ++i) std::swap(all[i], all[rng.uniform(i, static_cast<int>(all.size()) - 1)]);
    Graph g(n, std::vector<Edge>(all.begin(), all.begin() + m));
    if (cactusdim::min_degree(g) >= 2 && is_connected(g)) return g;
  }
  throw cap_exceeded_error("rejection sampling cap exceeded");
}

/// Random 2-connected graph on k >= 3 vertices: a Hamiltonian cycle plus random chords.
inline Graph random_two_connected(int k, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[i] = i;
  for (int i = k - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  std::set<Edge> edges;
  for (int i = 0; i < k; ++i) edges.insert(Edge(perm[i], perm[(i + 1) % k]));
  int chords = k > 3 ? rng.uniform(0, k - 2) : 0;
  for (int t = 0; t < chords; ++t) {
    int u = rng.uniform(0, k - 1), v = rng.uniform(0, k - 1);
    if (u != v) edges.insert(Edge(u, v));
  }
  return Graph(k, std::vector<Edge>(edges.begin(), edges.end()));
}

/// Connected graph with a cut vertex and min degree >= 2, built by gluing 2..4 random
/// 2-connected blocks along a tree, sometimes through a bridge. At most max_n vertices.
inline Graph random_block_glued_graph(int max_n, std::uint64_t seed) {
  if (max_n < 5) throw graph_error("block-glued graphs need at least 5 vertices");
  Rng rng(seed);
  while (true) {
    std::vector<Edge> edges;
    int n = 0;
    int blocks = rng.uniform(2, 4);
    vertex_t attach = -1;  // forced attachment point after a bridge
    bool ok = true;
    for (int b = 0; b < blocks; ++b) {
      int room = max_n - n + (n > 0 ? 1 : 0);
      if (room < 3) {
        ok = b >= 2 && attach < 0;
        blocks = b;
        break;
      }
      int k = rng.uniform(3, std::min(room, 6));
      Graph block = random_two_connected(k, rng);
      vertex_t at = attach >= 0 ? attach : (n > 0 ? rng.uniform(0, n - 1) : -1);
      attach = -1;
      std::vector<int> map(static_cast<std::size_t>(k));
      int glued = n > 0 ? rng.uniform(0, k - 1) : -1;
      for (int i = 0; i < k; ++i) map[i] = i == glued ? at : n++;
      for (const Edge& e : block.edges()) edges.emplace_back(map[e.u], map[e.v]);
      bool last = b + 1 == blocks;
      if (!last && n + 3 <= max_n && rng.uniform(0, 3) == 0) {
        vertex_t from = rng.uniform(0, n - 1);
        edges.emplace_back(from, n);
        attach = n++;
      }
    }
    if (!ok || blocks < 2) continue;
    Graph g(n, std::move(edges));
    if (cactusdim::min_degree(g) >= 2 && is_connected(g) && !block_decomposition(g).cut_vertices.empty()) return g;
  }
}

}  // namespace cactusdim
