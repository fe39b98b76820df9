#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace cactusdim {

/// Distance value for vertex pairs in different components.
inline constexpr int unreachable = -1;

/// All-pairs hop distances computed by one BFS per source.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g) : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_, unreachable) {
    std::vector<vertex_t> queue(static_cast<std::size_t>(n_));
    for (vertex_t s = 0; s < n_; ++s) {
      int* row = &dist_[static_cast<std::size_t>(s) * n_];
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        vertex_t u = queue[head++];
        for (vertex_t w : g.neighbors(u)) {
          if (row[w] == unreachable) {
            row[w] = row[u] + 1;
            queue[tail++] = w;
          }
        }
      }
    }
  }

  int order() const { return n_; }
  int operator()(vertex_t u, vertex_t v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(vertex_t u, vertex_t v) const { return (*this)(u, v) != unreachable; }

  /// d(u, e) = min(d(u, a), d(u, b)) for e = ab; e must be an edge.
  int to_edge(vertex_t u, Edge e) const {
    if ((*this)(e.u, e.v) != 1) throw graph_error("vertex_edge_distance: pair is not an edge");
    int a = (*this)(u, e.u);
    int b = (*this)(u, e.v);
    if (a == unreachable) return b;
    if (b == unreachable) return a;
    return std::min(a, b);
  }

 private:
  int n_;
  std::vector<int> dist_;
};

inline DistanceOracle all_pairs_distances(const Graph& g) { return DistanceOracle(g); }

inline int vertex_edge_distance(const DistanceOracle& o, vertex_t u, Edge e) { return o.to_edge(u, e); }

}  // namespace cactusdim
