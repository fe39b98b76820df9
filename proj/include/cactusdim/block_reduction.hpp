// Reduction to blocks: cyclomatic additivity, composition of a generator from per-block
// generators, and the bound chains that follow from it.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "distance.hpp"
#include "exact_dim.hpp"
#include "graph.hpp"

namespace cactusdim {

inline bool cyclomatic_additivity_check(const Graph& g) {
  int global = cyclomatic_number(g);
  int sum = 0;
  for (const Block& b : block_decomposition(g).blocks) sum += static_cast<int>(b.edges.size()) - b.order() + 1;
  return global == sum;
}

struct Delta3Record {
  int n = 0;
  int m = 0;
  int c = 0;
  int n_minus_1 = 0;
  int two_c_minus_1 = 0;
  bool chain_holds = false;  // 2m >= 3n, hence n-1 <= 2c-2 < 2c-1
  int dim = 0;
  int edim = 0;
  bool strict = false;  // dim < 2c-1 and edim < 2c-1
};

inline Delta3Record delta3_bound_check(const Graph& g, const SolverOptions& solver = {}) {
  require_connected(g);
  if (min_degree(g) < 3) throw graph_error("minimum degree must be at least 3");
  Delta3Record r;
  r.n = g.order();
  r.m = g.size();
  r.c = cyclomatic_number(g);
  r.n_minus_1 = r.n - 1;
  r.two_c_minus_1 = 2 * r.c - 1;
  r.chain_holds = 2 * r.m >= 3 * r.n && r.n_minus_1 <= 2 * r.c - 2;
  r.dim = exact_dimension(g, DimensionMode::vertex, solver).size;
  r.edim = exact_dimension(g, DimensionMode::edge, solver).size;
  r.strict = r.dim < r.two_c_minus_1 && r.edim < r.two_c_minus_1;
  return r;
}

// ---------------------------------------------------------------------------
// Composition

/// Bipartite forest between non-trivial blocks and critical cut vertices.
struct GammaForest {
  std::vector<int> blocks;              // indices into the block decomposition
  std::vector<vertex_t> critical;       // sorted
  std::vector<std::pair<int, vertex_t>> edges;    // (block, v) with v critical on the block
  std::vector<int> roots;               // one block per tree
  std::vector<std::pair<int, vertex_t>> e_prime;  // selected edges

  bool is_forest() const {
    // nodes: blocks then critical vertices
    std::map<std::pair<int, int>, int> id;
    for (int b : blocks) id.emplace(std::make_pair(0, b), static_cast<int>(id.size()));
    for (vertex_t v : critical) id.emplace(std::make_pair(1, v), static_cast<int>(id.size()));
    std::vector<int> parent(id.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [b, v] : edges) {
      int x = find(id.at({0, b})), y = find(id.at({1, v}));
      if (x == y) return false;
      parent[x] = y;
    }
    return true;
  }

  bool leaves_are_blocks() const {
    return std::all_of(critical.begin(), critical.end(), [&](vertex_t v) {
      return std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.second == v; }) >= 2;
    });
  }

  /// Every critical vertex keeps at most one edge outside E'.
  bool selection_ok() const {
    for (vertex_t v : critical) {
      int outside = 0;
      for (const auto& e : edges)
        if (e.second == v && std::find(e_prime.begin(), e_prime.end(), e) == e_prime.end()) ++outside;
      if (outside > 1) return false;
    }
    return static_cast<int>(e_prime.size()) <= std::max<int>(0, static_cast<int>(blocks.size()) - 1);
  }
};

struct VPath {
  int block = -1;
  vertex_t v = -1;
  std::vector<vertex_t> vertices;  // v-critical part of the block (always contains v)
  vertex_t repair = -1;
};

struct CompositionCertificate {
  DimensionMode mode = DimensionMode::vertex;
  std::vector<int> blocks;                    // non-trivial blocks, non-cycles first
  std::vector<std::vector<vertex_t>> block_vertices;
  std::vector<int> per_block_dim;
  std::vector<std::vector<vertex_t>> per_block_set;  // S_i (global labels)
  int p = 0;
  int q = 0;
  std::vector<vertex_t> s;         // union of the S_i
  GammaForest gamma;
  std::vector<VPath> v_paths;      // one per edge of E'
  std::vector<vertex_t> s_prime;
  std::vector<vertex_t> s_star;
  int bound = 0;  // sum of per-block dimensions + p - 1
  int achieved = 0;
  bool verified = false;  // S* is a generator of the requested mode
  bool within_bound() const { return achieved <= bound; }
};

class composition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

// Single vertex standing in for a generator of a cycle block.
inline vertex_t cycle_representative(const Block& b) {
  std::vector<vertex_t> non_cut;
  for (vertex_t v : b.vertices)
    if (!std::binary_search(b.cut_vertices.begin(), b.cut_vertices.end(), v)) non_cut.push_back(v);
  if (non_cut.empty()) return b.vertices.front();
  if (!b.is_end_block || b.order() % 2 == 1) return non_cut.front();
  DistanceOracle o(block_graph(b));
  auto local = [&](vertex_t v) { return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin()); };
  int cut = local(b.cut_vertices.front());
  for (vertex_t v : non_cut)
    if (o(cut, local(v)) != b.order() / 2) return v;
  return non_cut.front();
}

inline bool item_in_block(const BlockDecomposition& dec, const Item& x, int block) {
  if (x.is_edge) return dec.edge_block[x.index] == block;
  return dec.blocks[block].contains(x.index);
}

}  // namespace detail

/// Builds a generator of g from per-block generators, repairing critical incidences at cut
/// vertices through a rooted selection in the block/critical-vertex forest.
inline CompositionCertificate compose_generator(const Graph& g, DimensionMode mode, const SolverOptions& solver = {}) {
  if (mode == DimensionMode::mixed) throw graph_error("composition is defined for vertex and edge modes");
  require_connected(g);
  if (min_degree(g) < 2) throw graph_error("minimum degree must be at least 2");
  if (is_cycle_graph(g)) throw graph_error("graph is a cycle");

  auto dec = block_decomposition(g);
  DistanceOracle o(g);
  CompositionCertificate cert;
  cert.mode = mode;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i)
    if (dec.blocks[i].non_trivial && !dec.blocks[i].is_cycle) cert.blocks.push_back(static_cast<int>(i));
  cert.p = static_cast<int>(cert.blocks.size());
  for (std::size_t i = 0; i < dec.blocks.size(); ++i)
    if (dec.blocks[i].non_trivial && dec.blocks[i].is_cycle) cert.blocks.push_back(static_cast<int>(i));
  cert.q = static_cast<int>(cert.blocks.size());

  std::set<vertex_t> s;
  for (int bi : cert.blocks) {
    const Block& b = dec.blocks[bi];
    cert.block_vertices.push_back(b.vertices);
    std::vector<vertex_t> si;
    if (b.is_cycle) {
      cert.per_block_dim.push_back(2);
      si = {detail::cycle_representative(b)};
    } else {
      auto w = exact_dimension(block_graph(b), mode, solver);
      cert.per_block_dim.push_back(w.size);
      for (vertex_t local : w.set) si.push_back(b.vertices[local]);
    }
    s.insert(si.begin(), si.end());
    cert.per_block_set.push_back(std::move(si));
  }
  cert.s.assign(s.begin(), s.end());
  cert.bound = std::accumulate(cert.per_block_dim.begin(), cert.per_block_dim.end(), 0) + cert.p - 1;

  if (cert.q == 1) {  // the graph is its single block
    cert.s_star = cert.per_block_set.front();
    std::sort(cert.s_star.begin(), cert.s_star.end());
    cert.achieved = static_cast<int>(cert.s_star.size());
    cert.gamma.blocks = cert.blocks;
    cert.gamma.roots = cert.blocks;
    cert.verified = is_generator(g, o, cert.s_star, mode);
    return cert;
  }

  // Critical incidences: undistinguished pairs lying in two blocks that share a cut vertex.
  std::set<std::pair<int, vertex_t>> gamma_edges;
  for (const ItemPair& pr : undistinguished_pairs(g, cert.s, mode)) {
    for (int bi : cert.blocks) {
      if (!detail::item_in_block(dec, pr.first, bi)) continue;
      for (int bj : cert.blocks) {
        if (bj == bi || !detail::item_in_block(dec, pr.second, bj)) continue;
        for (vertex_t v : dec.blocks[bi].cut_vertices) {
          if (!dec.blocks[bj].contains(v)) continue;
          bool x_is_v = !pr.first.is_edge && pr.first.index == v;
          bool y_is_v = !pr.second.is_edge && pr.second.index == v;
          if (x_is_v || y_is_v) continue;
          gamma_edges.insert({bi, v});
          gamma_edges.insert({bj, v});
        }
      }
    }
  }
  GammaForest& gamma = cert.gamma;
  {
    std::vector<int> sorted_blocks = cert.blocks;
    std::sort(sorted_blocks.begin(), sorted_blocks.end());
    gamma.blocks = sorted_blocks;
  }
  std::set<vertex_t> crit;
  for (const auto& e : gamma_edges) {
    gamma.edges.push_back(e);
    crit.insert(e.second);
  }
  gamma.critical.assign(crit.begin(), crit.end());

  // Root each tree at a block of maximum degree (smallest index on ties); select every edge
  // from a critical vertex to its child blocks.
  std::map<int, std::vector<vertex_t>> block_nb;
  std::map<vertex_t, std::vector<int>> vertex_nb;
  for (auto [b, v] : gamma.edges) {
    block_nb[b].push_back(v);
    vertex_nb[v].push_back(b);
  }
  std::set<int> seen_blocks;
  std::set<vertex_t> seen_vertices;
  while (seen_blocks.size() < gamma.blocks.size()) {
    int root = -1;
    // the tree of the smallest unseen block, then its maximum-degree block
    int start = -1;
    for (int b : gamma.blocks)
      if (!seen_blocks.count(b)) {
        start = b;
        break;
      }
    std::vector<int> tree_blocks;
    {
      std::queue<int> qb;
      std::set<int> in_tree{start};
      std::set<vertex_t> in_tree_v;
      qb.push(start);
      while (!qb.empty()) {
        int b = qb.front();
        qb.pop();
        tree_blocks.push_back(b);
        for (vertex_t v : block_nb[b]) {
          if (!in_tree_v.insert(v).second) continue;
          for (int nb : vertex_nb[v])
            if (in_tree.insert(nb).second) qb.push(nb);
        }
      }
    }
    for (int b : tree_blocks) {
      auto deg = [&](int x) { return static_cast<int>(block_nb[x].size()); };
      if (root < 0 || deg(b) > deg(root) || (deg(b) == deg(root) && b < root)) root = b;
    }
    gamma.roots.push_back(root);
    std::queue<int> qb;
    qb.push(root);
    seen_blocks.insert(root);
    while (!qb.empty()) {
      int b = qb.front();
      qb.pop();
      for (vertex_t v : block_nb[b]) {
        if (!seen_vertices.insert(v).second) continue;
        for (int child : vertex_nb[v]) {
          if (child == b || seen_blocks.count(child)) continue;
          seen_blocks.insert(child);
          gamma.e_prime.emplace_back(child, v);
          qb.push(child);
        }
      }
    }
  }
  std::sort(gamma.e_prime.begin(), gamma.e_prime.end());

  // Repair: for each selected (block, v), add the v-critical vertex of the block farthest from v.
  std::set<vertex_t> s_prime;
  for (auto [bi, v] : gamma.e_prime) {
    const Block& b = dec.blocks[bi];
    const auto& si = cert.per_block_set[std::find(cert.blocks.begin(), cert.blocks.end(), bi) - cert.blocks.begin()];
    VPath path;
    path.block = bi;
    path.v = v;
    // Items of the block whose shortest paths to every vertex of S_i pass through v.
    std::set<vertex_t> on_path{v};
    if (mode == DimensionMode::vertex) {
      for (vertex_t x : b.vertices)
        if (std::all_of(si.begin(), si.end(), [&](vertex_t t) { return o(x, t) == o(x, v) + o(v, t); }))
          on_path.insert(x);
    } else {
      for (const Edge& e : b.edges)
        if (std::all_of(si.begin(), si.end(), [&](vertex_t t) { return o.to_edge(t, e) == o.to_edge(v, e) + o(v, t); })) {
          on_path.insert(e.u);
          on_path.insert(e.v);
        }
    }
    path.vertices.assign(on_path.begin(), on_path.end());
    for (vertex_t x : path.vertices)
      if (x != v && (path.repair < 0 || o(x, v) > o(path.repair, v))) path.repair = x;
    if (path.repair < 0) {  // degenerate v-path: take the smallest block neighbour of v outside S
      for (vertex_t x : g.neighbors(v))
        if (b.contains(x) && !s.count(x) && (path.repair < 0 || x < path.repair)) path.repair = x;
      if (path.repair < 0) path.repair = v;
    }
    s_prime.insert(path.repair);
    cert.v_paths.push_back(std::move(path));
  }
  cert.s_prime.assign(s_prime.begin(), s_prime.end());
  std::set<vertex_t> star(s.begin(), s.end());
  star.insert(s_prime.begin(), s_prime.end());
  cert.s_star.assign(star.begin(), star.end());
  cert.achieved = static_cast<int>(cert.s_star.size());
  cert.verified = is_generator(g, o, cert.s_star, mode);
  return cert;
}

/// Pairs lying in two vertex-disjoint non-trivial blocks that `s` leaves undistinguished.
inline std::vector<ItemPair> disjoint_block_failures(const Graph& g, std::span<const vertex_t> s, DimensionMode mode) {
  auto dec = block_decomposition(g);
  std::vector<ItemPair> out;
  for (const ItemPair& pr : undistinguished_pairs(g, s, mode)) {
    bool bad = false;
    for (std::size_t i = 0; i < dec.blocks.size() && !bad; ++i) {
      if (!dec.blocks[i].non_trivial || !detail::item_in_block(dec, pr.first, static_cast<int>(i))) continue;
      for (std::size_t j = 0; j < dec.blocks.size() && !bad; ++j) {
        if (i == j || !dec.blocks[j].non_trivial || !detail::item_in_block(dec, pr.second, static_cast<int>(j))) continue;
        const auto& a = dec.blocks[i].vertices;
        bad = std::none_of(a.begin(), a.end(), [&](vertex_t v) { return dec.blocks[j].contains(v); });
      }
    }
    if (bad) out.push_back(pr);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block bound chain

struct BlockChainRecord {
  int c = 0;
  int p = 0;
  int q = 0;
  std::vector<int> block_c;
  std::vector<int> block_dim;
  std::vector<int> block_edim;
  std::vector<bool> block_is_cycle;
  bool hypothesis_dim = true;   // dim(G_i) <= 2c(G_i)-1 for every non-cycle block
  bool hypothesis_edim = true;
  int block_sum_bound_dim = 0;      // sum dim(G_i) + p - 1
  int block_sum_bound_edim = 0;
  int hypothesis_bound = 0;     // sum over non-cycles of (2c_i - 1) + 2(q-p) + p - 1, equal to 2c-1
  int proof_expression = 0;     // 2c - (q-p) - 1 as written at the end of the proof chain
  int dim = 0;
  int edim = 0;
  bool chain_dim = false;       // dim <= block sum bound <= hypothesis bound <= 2c-1 (when the hypothesis holds)
  bool chain_edim = false;
  bool disjoint_blocks = false;  // two vertex-disjoint non-trivial blocks exist
  bool strict_block_dim = false;   // some non-cycle block has dim(G_i) < 2c(G_i)-1
  bool strict_block_edim = false;
  bool strictness_dim = true;     // premise implies dim < 2c-1
  bool strictness_edim = true;
  bool proof_expression_binds_dim = false;  // proof_expression >= dim
  bool proof_expression_binds_edim = false;
};

inline BlockChainRecord theorem_blocks_check(const Graph& g, const SolverOptions& solver = {}) {
  require_connected(g);
  if (min_degree(g) < 2) throw graph_error("minimum degree must be at least 2");
  if (is_cycle_graph(g)) throw graph_error("graph is a cycle");
  auto dec = block_decomposition(g);
  BlockChainRecord r;
  r.c = cyclomatic_number(g);
  std::vector<int> nontrivial;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const Block& b = dec.blocks[i];
    if (!b.non_trivial) continue;
    nontrivial.push_back(static_cast<int>(i));
    int ci = static_cast<int>(b.edges.size()) - b.order() + 1;
    r.block_c.push_back(ci);
    r.block_is_cycle.push_back(b.is_cycle);
    int d = 2, e = 2;
    if (!b.is_cycle) {
      Graph h = block_graph(b);
      d = exact_dimension(h, DimensionMode::vertex, solver).size;
      e = exact_dimension(h, DimensionMode::edge, solver).size;
      ++r.p;
      r.hypothesis_dim = r.hypothesis_dim && d <= 2 * ci - 1;
      r.hypothesis_edim = r.hypothesis_edim && e <= 2 * ci - 1;
      r.strict_block_dim = r.strict_block_dim || d < 2 * ci - 1;
      r.strict_block_edim = r.strict_block_edim || e < 2 * ci - 1;
      r.hypothesis_bound += 2 * ci - 1;
    } else {
      r.hypothesis_bound += 2;
    }
    r.block_dim.push_back(d);
    r.block_edim.push_back(e);
  }
  r.q = static_cast<int>(nontrivial.size());
  r.hypothesis_bound += r.p - 1;
  r.block_sum_bound_dim = std::accumulate(r.block_dim.begin(), r.block_dim.end(), 0) + r.p - 1;
  r.block_sum_bound_edim = std::accumulate(r.block_edim.begin(), r.block_edim.end(), 0) + r.p - 1;
  r.proof_expression = 2 * r.c - (r.q - r.p) - 1;
  r.dim = exact_dimension(g, DimensionMode::vertex, solver).size;
  r.edim = exact_dimension(g, DimensionMode::edge, solver).size;

  int top = 2 * r.c - 1;
  r.chain_dim = r.dim <= r.block_sum_bound_dim && (!r.hypothesis_dim || (r.block_sum_bound_dim <= r.hypothesis_bound && r.hypothesis_bound <= top));
  r.chain_edim = r.edim <= r.block_sum_bound_edim && (!r.hypothesis_edim || (r.block_sum_bound_edim <= r.hypothesis_bound && r.hypothesis_bound <= top));

  for (std::size_t i = 0; i < nontrivial.size() && !r.disjoint_blocks; ++i)
    for (std::size_t j = i + 1; j < nontrivial.size() && !r.disjoint_blocks; ++j) {
      const Block& a = dec.blocks[nontrivial[i]];
      const Block& b = dec.blocks[nontrivial[j]];
      r.disjoint_blocks = std::none_of(a.vertices.begin(), a.vertices.end(), [&](vertex_t v) { return b.contains(v); });
    }
  if (r.hypothesis_dim && (r.strict_block_dim || r.disjoint_blocks)) r.strictness_dim = r.dim < top;
  if (r.hypothesis_edim && (r.strict_block_edim || r.disjoint_blocks)) r.strictness_edim = r.edim < top;
  r.proof_expression_binds_dim = r.proof_expression >= r.dim;
  r.proof_expression_binds_edim = r.proof_expression >= r.edim;
  return r;
}

}  // namespace cactusdim
