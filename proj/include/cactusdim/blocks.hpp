#pragma once

#include <algorithm>
#include <vector>

#include "graph.hpp"

namespace cactusdim {

struct Block {
  std::vector<Edge> edges;        // sorted
  std::vector<vertex_t> vertices;  // sorted
  std::vector<vertex_t> cut_vertices;  // cut vertices of G lying in this block
  bool non_trivial = false;        // >= 3 vertices
  bool is_cycle = false;
  bool is_end_block = false;       // exactly one cut vertex of G

  int order() const { return static_cast<int>(vertices.size()); }
  bool contains(vertex_t v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;           // ordered by smallest edge
  std::vector<vertex_t> cut_vertices;  // sorted
  std::vector<int> edge_block;         // edge index (as in Graph::edges()) -> block index

  bool is_cut_vertex(vertex_t v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
};

/// Biconnected components (Hopcroft-Tarjan with an explicit edge stack).
inline BlockDecomposition block_decomposition(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Edge>> raw;
  std::vector<Edge> edge_stack;

  struct Frame {
    vertex_t v;
    vertex_t parent;
    std::size_t next;
    int children;
  };
  int timer = 0;
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0, 0});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      vertex_t w = nbrs[f.next++];
      if (disc[w] == -1) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = timer++;
        ++f.children;
        stack.push_back({w, f.v, 0, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children > 1) is_cut[done.v] = true;
      break;
    }
    vertex_t p = done.parent;
    low[p] = std::min(low[p], low[done.v]);
    if (low[done.v] >= disc[p]) {
      if (stack.back().parent != -1) is_cut[p] = true;
      std::vector<Edge> comp;
      Edge tree_edge(p, done.v);
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        comp.push_back(e);
        if (e == tree_edge) break;
      }
      std::sort(comp.begin(), comp.end());
      raw.push_back(std::move(comp));
    }
  }

  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  BlockDecomposition d;
  for (vertex_t v = 0; v < n; ++v)
    if (is_cut[v]) d.cut_vertices.push_back(v);
  d.edge_block.assign(static_cast<std::size_t>(g.size()), -1);
  for (auto& edges : raw) {
    Block b;
    for (const Edge& e : edges) {
      b.vertices.push_back(e.u);
      b.vertices.push_back(e.v);
      d.edge_block[g.edge_index(e.u, e.v)] = static_cast<int>(d.blocks.size());
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    for (vertex_t v : b.vertices)
      if (is_cut[v]) b.cut_vertices.push_back(v);
    b.edges = std::move(edges);
    b.non_trivial = b.vertices.size() >= 3;
    b.is_cycle = b.non_trivial && b.edges.size() == b.vertices.size();
    b.is_end_block = b.cut_vertices.size() == 1;
    d.blocks.push_back(std::move(b));
  }
  return d;
}

/// c(G) = |E| - |V| + 1 for connected G.
inline int cyclomatic_number(const Graph& g) {
  require_connected(g);
  return g.size() - g.order() + 1;
}

/// The block as a standalone graph; local vertex i is block.vertices[i].
inline Graph block_graph(const Block& b) { return edge_subgraph(b.vertices, b.edges); }

}  // namespace cactusdim
