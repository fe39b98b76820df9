// Canonical labeling for small graphs: colour refinement plus individualization,
// with automorphism pruning. Intended for n up to a few dozen vertices.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace cactusdim {

struct CanonicalForm {
  std::vector<int> label;  // vertex -> canonical position
  Graph graph{1};          // g relabeled by `label`
  std::string key;         // graph6 of `graph`; equal keys <=> isomorphic graphs
};

namespace detail {

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<int> colors) : g_(g), n_(g.order()), colors_(std::move(colors)) {
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const Edge& e : g.edges()) adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
  }

  std::vector<int> run() {
    Partition root;
    std::vector<std::pair<int, int>> by_colour;
    for (int v = 0; v < n_; ++v) by_colour.emplace_back(colors_.empty() ? 0 : colors_[v], v);
    std::sort(by_colour.begin(), by_colour.end());
    for (std::size_t i = 0; i < by_colour.size(); ++i) {
      if (i == 0 || by_colour[i].first != by_colour[i - 1].first) root.cells.emplace_back();
      root.cells.back().push_back(by_colour[i].second);
    }
    refine(root);
    std::vector<int> path;
    search(root, path);
    return best_label_;
  }

 private:
  struct Partition {
    std::vector<std::vector<int>> cells;
  };

  // Split cells by neighbour counts into every cell until stable; sub-cells ordered by signature.
  void refine(Partition& p) const {
    while (true) {
      std::vector<int> cell_of(static_cast<std::size_t>(n_));
      for (std::size_t c = 0; c < p.cells.size(); ++c)
        for (int v : p.cells[c]) cell_of[v] = static_cast<int>(c);
      bool split = false;
      std::vector<std::vector<int>> next;
      for (const auto& cell : p.cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : cell) {
          std::vector<int> counts(p.cells.size(), 0);
          for (int w : g_.neighbors(v)) ++counts[cell_of[w]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= sig.size(); ++i) {
          if (i == sig.size() || sig[i].first != sig[start].first) {
            std::vector<int> part;
            for (std::size_t j = start; j < i; ++j) part.push_back(sig[j].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (sig.front().first != sig.back().first) split = true;
      }
      p.cells = std::move(next);
      if (!split) return;
    }
  }

  std::vector<std::uint8_t> certificate(const std::vector<int>& order) const {
    std::vector<std::uint8_t> cert;
    cert.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) cert.push_back(adj_[order[i] * n_ + order[j]]);
    return cert;
  }

  // Returns the depth to unwind to (the current depth to continue normally).
  std::size_t search(const Partition& p, std::vector<int>& path) {
    std::size_t target = p.cells.size();
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      if (p.cells[c].size() > 1 && (target == p.cells.size() || p.cells[c].size() < p.cells[target].size())) target = c;
    }
    if (target == p.cells.size()) return leaf(p, path);

    std::vector<int> candidates = p.cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> tried;
    for (int v : candidates) {
      if (pruned(path, tried, v)) continue;
      tried.push_back(v);
      Partition child = p;
      auto& cell = child.cells[target];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      child.cells.insert(child.cells.begin() + static_cast<std::ptrdiff_t>(target), std::vector<int>{v});
      refine(child);
      path.push_back(v);
      std::size_t unwind = search(child, path);
      path.pop_back();
      if (unwind < path.size()) return unwind;
    }
    return path.size();
  }

  std::size_t leaf(const Partition& p, const std::vector<int>& path) {
    std::vector<int> order;
    for (const auto& cell : p.cells) order.push_back(cell[0]);
    auto cert = certificate(order);
    if (!have_leaf_) {
      have_leaf_ = true;
      accept(order, std::move(cert), path);
      first_order_ = order;
      first_path_ = path;
      first_cert_ = best_cert_;
      return path.size();
    }
    if (cert == first_cert_) return record_automorphism(first_order_, order, first_path_, path);
    if (cert == best_cert_) return record_automorphism(best_order_, order, best_path_, path);
    if (cert < best_cert_) accept(order, std::move(cert), path);
    return path.size();
  }

  void accept(const std::vector<int>& order, std::vector<std::uint8_t> cert, const std::vector<int>& path) {
    best_cert_ = std::move(cert);
    best_order_ = order;
    best_path_ = path;
    best_label_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) best_label_[order[i]] = i;
  }

  // gamma maps order_b[i] -> order_a[i]; unwind to the common prefix of the two paths.
  std::size_t record_automorphism(const std::vector<int>& order_a, const std::vector<int>& order_b,
                                  const std::vector<int>& path_a, const std::vector<int>& path_b) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[order_b[i]] = order_a[i];
    automorphisms_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < path_a.size() && common < path_b.size() && path_a[common] == path_b[common]) ++common;
    return common;
  }

  // v is redundant if a known automorphism fixing the current path maps it onto an explored sibling.
  bool pruned(const std::vector<int>& path, const std::vector<int>& tried, int v) const {
    if (tried.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int x) { return gamma[x] == x; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    int root = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
  }

  const Graph& g_;
  int n_;
  std::vector<int> colors_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint8_t> best_cert_, first_cert_;
  std::vector<int> best_order_, first_order_, best_path_, first_path_, best_label_;
  std::vector<std::vector<int>> automorphisms_;
  bool have_leaf_ = false;
};

}  // namespace detail

/// `colors` (optional, one value per vertex) restricts the labeling to colour-preserving
/// maps; vertices of smaller colour receive smaller canonical positions.
inline CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {}) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) throw graph_error("colour vector has wrong length");
  CanonicalForm f;
  if (g.order() == 1) {
    f.label = {0};
    f.graph = g;
  } else {
    f.label = detail::CanonicalSearch(g, colors).run();
    f.graph = relabel(g, f.label);
  }
  f.key = encode_graph6(f.graph);
  return f;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a).key == canonical_form(b).key;
}

}  // namespace cactusdim
