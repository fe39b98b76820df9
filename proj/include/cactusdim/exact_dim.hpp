// Exact vertex / edge / mixed metric dimension via minimum set cover.
//
// Universe: unordered pairs of items (vertices, edges or both). Vertex s covers
// the pairs it distinguishes. The optimum size is found by branch-and-bound
// (greedy upper bound, disjoint-pair lower bound), then the lexicographically
// least generator of that size is recovered by an ordered search.
#pragma once

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitset.hpp"
#include "distance.hpp"
#include "graph.hpp"

namespace cactusdim {

enum class DimensionMode { vertex, edge, mixed };

inline std::string_view to_string(DimensionMode m) {
  switch (m) {
    case DimensionMode::vertex: return "vertex";
    case DimensionMode::edge: return "edge";
    case DimensionMode::mixed: return "mixed";
  }
  return "?";
}

inline DimensionMode parse_mode(std::string_view s) {
  if (s == "vertex") return DimensionMode::vertex;
  if (s == "edge") return DimensionMode::edge;
  if (s == "mixed") return DimensionMode::mixed;
  throw graph_error("unknown dimension mode: " + std::string(s));
}

/// A vertex or an edge (edge index refers to Graph::edges()).
struct Item {
  bool is_edge = false;
  int index = 0;

  static Item vertex(vertex_t v) { return {false, v}; }
  static Item edge(int e) { return {true, e}; }

  friend auto operator<=>(const Item&, const Item&) = default;
};

struct ItemPair {
  Item first;
  Item second;
  friend auto operator<=>(const ItemPair&, const ItemPair&) = default;
};

inline std::string to_string(const Graph& g, Item x) {
  if (!x.is_edge) return std::to_string(x.index);
  const Edge& e = g.edges()[x.index];
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Items of the mode's universe in canonical order (vertices, then edges).
inline std::vector<Item> universe(const Graph& g, DimensionMode mode) {
  std::vector<Item> items;
  if (mode != DimensionMode::edge)
    for (vertex_t v = 0; v < g.order(); ++v) items.push_back(Item::vertex(v));
  if (mode != DimensionMode::vertex)
    for (int e = 0; e < g.size(); ++e) items.push_back(Item::edge(e));
  return items;
}

inline int item_distance(const Graph& g, const DistanceOracle& o, vertex_t s, Item x) {
  return x.is_edge ? o.to_edge(s, g.edges()[x.index]) : o(s, x.index);
}

inline bool distinguishes(const Graph& g, const DistanceOracle& o, vertex_t s, Item x, Item y, DimensionMode mode) {
  auto check = [&](Item it) {
    bool ok = it.is_edge ? (mode != DimensionMode::vertex && it.index >= 0 && it.index < g.size())
                         : (mode != DimensionMode::edge && it.index >= 0 && it.index < g.order());
    if (!ok) throw graph_error("item outside the mode's universe");
  };
  check(x);
  check(y);
  return item_distance(g, o, s, x) != item_distance(g, o, s, y);
}

namespace detail {

inline void check_vertex_set(const Graph& g, std::span<const vertex_t> s) {
  for (vertex_t v : s)
    if (v < 0 || v >= g.order()) throw graph_error("vertex outside the graph");
}

/// Distance vectors of all items to the vertices of S, item-major.
inline std::vector<int> coordinates(const Graph& g, const DistanceOracle& o, std::span<const vertex_t> s,
                                    const std::vector<Item>& items) {
  std::vector<int> coords(items.size() * s.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) coords[i * s.size() + j] = item_distance(g, o, s[j], items[i]);
  return coords;
}

}  // namespace detail

inline std::vector<ItemPair> undistinguished_pairs(const Graph& g, std::span<const vertex_t> s, DimensionMode mode) {
  detail::check_vertex_set(g, s);
  DistanceOracle o(g);
  auto items = universe(g, mode);
  auto coords = detail::coordinates(g, o, s, items);
  const std::size_t k = s.size();
  std::vector<ItemPair> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (std::equal(coords.begin() + static_cast<std::ptrdiff_t>(i * k), coords.begin() + static_cast<std::ptrdiff_t>((i + 1) * k),
                     coords.begin() + static_cast<std::ptrdiff_t>(j * k)))
        out.push_back({items[i], items[j]});
  return out;
}

inline bool is_generator(const Graph& g, const DistanceOracle& o, std::span<const vertex_t> s, DimensionMode mode) {
  detail::check_vertex_set(g, s);
  auto items = universe(g, mode);
  auto coords = detail::coordinates(g, o, s, items);
  const std::size_t k = s.size();
  if (items.size() < 2) return true;
  if (k == 0) return false;
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return coords.begin() + static_cast<std::ptrdiff_t>(i * k); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(k), row(b), row(b) + static_cast<std::ptrdiff_t>(k));
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (std::equal(row(order[i - 1]), row(order[i - 1]) + static_cast<std::ptrdiff_t>(k), row(order[i]))) return false;
  return true;
}

inline bool is_generator(const Graph& g, std::span<const vertex_t> s, DimensionMode mode) {
  return is_generator(g, DistanceOracle(g), s, mode);
}

struct GeneratorWitness {
  int size = 0;
  std::vector<vertex_t> set;
  DimensionMode mode = DimensionMode::vertex;
};

struct SolverOptions {
  std::size_t pair_cap = 2'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Vertex classes with identical distances to every other vertex (size >= 2 only).
inline std::vector<std::vector<vertex_t>> twin_classes(const Graph& g, const DistanceOracle& o) {
  const int n = g.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<vertex_t>> out;
  for (vertex_t u = 0; u < n; ++u) {
    if (cls[u] != -1) continue;
    std::vector<vertex_t> members{u};
    for (vertex_t v = u + 1; v < n; ++v) {
      if (cls[v] != -1) continue;
      bool twin = true;
      for (vertex_t x = 0; x < n && twin; ++x)
        if (x != u && x != v && o(u, x) != o(v, x)) twin = false;
      if (twin) members.push_back(v);
    }
    for (vertex_t v : members) cls[v] = static_cast<int>(out.size());
    if (members.size() >= 2) out.push_back(std::move(members));
  }
  return out;
}

namespace detail {

class SetCoverSearch {
 public:
  SetCoverSearch(const Graph& g, const DistanceOracle& o, DimensionMode mode, const SolverOptions& opt)
      : n_(g.order()), options_(opt) {
    auto items = universe(g, mode);
    const std::size_t m = items.size();
    const std::size_t pairs = m < 2 ? 0 : m * (m - 1) / 2;
    if (pairs > opt.pair_cap) {
      throw cap_exceeded_error("pair universe of " + std::to_string(pairs) + " exceeds cap " + std::to_string(opt.pair_cap));
    }
    pairs_ = pairs;
    std::vector<int> coord(static_cast<std::size_t>(n_) * m);
    for (vertex_t s = 0; s < n_; ++s)
      for (std::size_t i = 0; i < m; ++i) coord[static_cast<std::size_t>(s) * m + i] = item_distance(g, o, s, items[i]);
    cover_.assign(static_cast<std::size_t>(n_), Bits(pairs));
    coverers_.assign(pairs, Bits(static_cast<std::size_t>(n_)));
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j, ++p) {
        for (vertex_t s = 0; s < n_; ++s) {
          const int* row = &coord[static_cast<std::size_t>(s) * m];
          if (row[i] != row[j]) {
            cover_[s].set(p);
            coverers_[p].set(static_cast<std::size_t>(s));
          }
        }
        if (coverers_[p].none()) throw graph_error("no metric generator exists for this universe");
      }
    }
    pair_order_.resize(pairs);
    std::iota(pair_order_.begin(), pair_order_.end(), 0);
    std::stable_sort(pair_order_.begin(), pair_order_.end(),
                     [&](std::size_t a, std::size_t b) { return coverers_[a].count() < coverers_[b].count(); });
    forced_.assign(static_cast<std::size_t>(n_), false);
    if (mode != DimensionMode::edge) {
      // Twins are swapped by an automorphism and only they separate each other, so all but one
      // member of each class belong to every generator; keeping the smallest ones is lex-least.
      for (const auto& cls : twin_classes(g, o))
        for (std::size_t i = 0; i + 1 < cls.size(); ++i) forced_[cls[i]] = true;
    }
  }

  GeneratorWitness solve(DimensionMode mode) {
    Bits uncovered(pairs_);
    uncovered.set_all();
    Bits allowed(static_cast<std::size_t>(n_));
    allowed.set_all();
    int forced_count = 0;
    for (vertex_t v = 0; v < n_; ++v) {
      if (!forced_[v]) continue;
      ++forced_count;
      uncovered.subtract(cover_[v]);
      allowed.reset(static_cast<std::size_t>(v));
    }
    best_ = forced_count + greedy(uncovered, allowed);
    branch(forced_count, uncovered, allowed);

    GeneratorWitness w;
    w.mode = mode;
    w.size = best_;
    Bits all(pairs_);
    all.set_all();
    std::vector<vertex_t> chosen;
    if (!lex_least(0, best_, all, chosen)) throw std::logic_error("set cover: lexicographic recovery failed");
    w.set = std::move(chosen);
    return w;
  }

 private:
  int greedy(Bits uncovered, const Bits& allowed) const {
    int count = 0;
    while (uncovered.any()) {
      std::size_t best_gain = 0;
      vertex_t pick = -1;
      for (vertex_t s = 0; s < n_; ++s) {
        if (!allowed.test(static_cast<std::size_t>(s))) continue;
        std::size_t gain = cover_[s].count_and(uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          pick = s;
        }
      }
      if (pick < 0) return n_ + 1;
      uncovered.subtract(cover_[pick]);
      ++count;
    }
    return count;
  }

  // Pairs with pairwise-disjoint available coverers each need their own vertex.
  int lower_bound(const Bits& uncovered, const Bits& allowed) const {
    Bits used(static_cast<std::size_t>(n_));
    int lb = 0;
    for (std::size_t p : pair_order_) {
      if (!uncovered.test(p)) continue;
      Bits avail = coverers_[p];
      avail &= allowed;
      if (avail.none()) return n_ + 1;
      if (!avail.intersects(used)) {
        ++lb;
        used |= avail;
      }
    }
    return lb;
  }

  void tick() {
    if (!options_.deadline || (++nodes_ & 1023) != 0) return;
    if (std::chrono::steady_clock::now() > *options_.deadline) throw cap_exceeded_error("time budget exceeded");
  }

  void branch(int chosen, const Bits& uncovered, Bits allowed) {
    tick();
    if (uncovered.none()) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (chosen + lower_bound(uncovered, allowed) >= best_) return;
    std::size_t pick = pairs_;
    std::size_t fewest = static_cast<std::size_t>(n_) + 1;
    for (std::size_t p = uncovered.first(); p < pairs_; p = uncovered.next(p + 1)) {
      std::size_t c = coverers_[p].count_and(allowed);
      if (c < fewest) {
        fewest = c;
        pick = p;
        if (c <= 1) break;
      }
    }
    if (fewest == 0) return;
    Bits options = coverers_[pick];
    options &= allowed;
    for (std::size_t s = options.first(); s < options.size(); s = options.next(s + 1)) {
      Bits rest = uncovered;
      rest.subtract(cover_[s]);
      allowed.reset(s);
      branch(chosen + 1, rest, allowed);
      if (chosen + 1 >= best_) return;
    }
  }

  bool lex_least(vertex_t from, int remaining, const Bits& uncovered, std::vector<vertex_t>& chosen) {
    tick();
    if (uncovered.none()) {
      for (vertex_t v = from; v < n_; ++v)
        if (forced_[v]) return false;
      return remaining >= 0;
    }
    if (remaining == 0 || from >= n_) return false;
    Bits allowed(static_cast<std::size_t>(n_));
    for (vertex_t v = from; v < n_; ++v) allowed.set(static_cast<std::size_t>(v));
    if (lower_bound(uncovered, allowed) > remaining) return false;
    for (vertex_t v = from; v < n_; ++v) {
      Bits rest = uncovered;
      rest.subtract(cover_[v]);
      chosen.push_back(v);
      if (lex_least(v + 1, remaining - 1, rest, chosen)) return true;
      chosen.pop_back();
      if (forced_[v]) return false;
    }
    return false;
  }

  int n_;
  SolverOptions options_;
  std::size_t pairs_ = 0;
  std::vector<Bits> cover_;
  std::vector<Bits> coverers_;
  std::vector<std::size_t> pair_order_;
  std::vector<bool> forced_;
  int best_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Minimum metric generator of the mode's universe with the lexicographically least witness.
inline GeneratorWitness exact_dimension(const Graph& g, DimensionMode mode, const SolverOptions& opt = {}) {
  require_connected(g);
  DistanceOracle o(g);
  detail::SetCoverSearch search(g, o, mode, opt);
  return search.solve(mode);
}

}  // namespace cactusdim
