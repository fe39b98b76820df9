#pragma once

#include <vector>

#include "graph.hpp"

namespace cactusdim {

struct VertexCover {
  int size = 0;
  std::vector<vertex_t> set;  // lexicographically least among minimum covers
};

namespace detail {

// Ordered search for a cover of exactly `remaining` more vertices chosen from [from, n).
inline bool cover_search(const Graph& h, vertex_t from, int remaining, std::vector<bool>& in, std::vector<vertex_t>& chosen) {
  // An edge whose endpoints are both below `from` and unchosen can no longer be covered.
  int greedy_need = 0;
  std::vector<bool> used(static_cast<std::size_t>(h.order()), false);
  for (const Edge& e : h.edges()) {
    if (in[e.u] || in[e.v]) continue;
    if (e.v < from) return false;
    if (!used[e.u] && !used[e.v]) {  // maximal matching on uncovered edges is a lower bound
      used[e.u] = used[e.v] = true;
      ++greedy_need;
    }
  }
  if (greedy_need == 0) return true;
  if (greedy_need > remaining) return false;
  for (vertex_t v = from; v < h.order(); ++v) {
    in[v] = true;
    chosen.push_back(v);
    if (cover_search(h, v + 1, remaining - 1, in, chosen)) return true;
    chosen.pop_back();
    in[v] = false;
  }
  return false;
}

}  // namespace detail

/// tau(h) with the lexicographically least minimum vertex cover.
inline VertexCover vertex_cover_number(const Graph& h) {
  for (int k = 0; k <= h.order(); ++k) {
    std::vector<bool> in(static_cast<std::size_t>(h.order()), false);
    std::vector<vertex_t> chosen;
    if (detail::cover_search(h, 0, k, in, chosen)) return {static_cast<int>(chosen.size()), chosen};
  }
  return {h.order(), {}};
}

}  // namespace cactusdim
