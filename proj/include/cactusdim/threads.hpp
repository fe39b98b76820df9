#pragma once

#include <map>
#include <vector>

#include "graph.hpp"

namespace cactusdim {

/// Pendant path u_1..u_k: u_1 a leaf, inner vertices of degree 2, u_k adjacent to `anchor` (degree >= 3).
struct Thread {
  std::vector<vertex_t> vertices;
  vertex_t anchor = -1;

  int length() const { return static_cast<int>(vertices.size()); }
};

struct ThreadProfile {
  std::vector<Thread> threads;  // ordered by leaf
  std::map<vertex_t, int> ell;  // anchor -> number of threads hanging there
  int L = 0;
  std::vector<int> thread_of;   // vertex -> thread index, -1 if not on a thread
};

inline int compute_L(const std::map<vertex_t, int>& ell) {
  int total = 0;
  for (const auto& [v, count] : ell)
    if (count > 1) total += count - 1;
  return total;
}

/// Threads and L(G). Paths and single vertices have no anchor and are rejected.
inline ThreadProfile thread_profile(const Graph& g) {
  require_connected(g);
  if (g.order() == 1 || is_path_graph(g)) throw graph_error("graph has no thread anchors (it is a path)");
  ThreadProfile p;
  p.thread_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (vertex_t leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Thread t;
    vertex_t prev = -1;
    vertex_t cur = leaf;
    while (g.degree(cur) <= 2) {
      t.vertices.push_back(cur);
      vertex_t next = -1;
      for (vertex_t w : g.neighbors(cur))
        if (w != prev) next = w;
      prev = cur;
      cur = next;
    }
    t.anchor = cur;
    for (vertex_t v : t.vertices) p.thread_of[v] = static_cast<int>(p.threads.size());
    ++p.ell[t.anchor];
    p.threads.push_back(std::move(t));
  }
  p.L = compute_L(p.ell);
  return p;
}

}  // namespace cactusdim
