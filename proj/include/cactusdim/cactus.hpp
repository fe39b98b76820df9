// Structural skeleton of cactus graphs: cycles, branch activity, B(G),
// BBR sets, cycle frames (S-paths), configurations A-E and critical vertices.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "blocks.hpp"
#include "exact_dim.hpp"
#include "graph.hpp"
#include "threads.hpp"

namespace cactusdim {

class not_cactus_error : public graph_error {
 public:
  not_cactus_error() : graph_error("graph is not a cactus") {}
};

inline bool is_cactus(const Graph& g) {
  auto d = block_decomposition(g);
  return std::all_of(d.blocks.begin(), d.blocks.end(), [](const Block& b) { return !b.non_trivial || b.is_cycle; });
}

struct CactusCycle {
  int block = -1;
  std::vector<vertex_t> vertices;           // cyclic order starting at the smallest vertex
  std::vector<int> position;                // vertex -> index in `vertices`, -1 if off the cycle
  std::vector<int> branch_owner;            // vertex x -> i such that x lies in G_{v_i}(C)
  std::vector<vertex_t> branch_active;      // sorted
  std::vector<std::vector<int>> threads_at;  // index i -> threads hanging at v_i

  int girth() const { return static_cast<int>(vertices.size()); }
  int b() const { return static_cast<int>(branch_active.size()); }
  bool end_cycle() const { return b() == 1; }
};

struct CactusProfile {
  std::vector<CactusCycle> cycles;  // in block order
  ThreadProfile threads;
  int L = 0;
  int B = 0;
  std::vector<std::vector<int>> cycles_at;  // vertex -> cycles through it

  int c() const { return static_cast<int>(cycles.size()); }

  /// Shared vertex of two distinct cycles, or -1.
  vertex_t shared_vertex(int i, int j) const {
    for (vertex_t v : cycles[i].vertices)
      if (cycles[j].position[v] >= 0) return v;
    return -1;
  }
};

inline int compute_B(const std::vector<CactusCycle>& cycles) {
  int total = 0;
  for (const auto& c : cycles) total += std::max(0, 2 - c.b());
  return total;
}

inline CactusProfile cactus_profile(const Graph& g) {
  auto dec = block_decomposition(g);
  for (const Block& b : dec.blocks)
    if (b.non_trivial && !b.is_cycle) throw not_cactus_error();

  const int n = g.order();
  CactusProfile p;
  if (n > 1 && !is_path_graph(g)) {
    p.threads = thread_profile(g);
  } else {
    p.threads.thread_of.assign(static_cast<std::size_t>(n), -1);
  }
  p.L = p.threads.L;
  p.cycles_at.assign(static_cast<std::size_t>(n), {});

  for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
    const Block& blk = dec.blocks[bi];
    if (!blk.is_cycle) continue;
    CactusCycle cyc;
    cyc.block = static_cast<int>(bi);
    std::vector<std::vector<vertex_t>> local(static_cast<std::size_t>(n));
    for (const Edge& e : blk.edges) {
      local[e.u].push_back(e.v);
      local[e.v].push_back(e.u);
    }
    vertex_t start = blk.vertices.front();
    vertex_t prev = start;
    vertex_t cur = std::min(local[start][0], local[start][1]);
    cyc.vertices.push_back(start);
    while (cur != start) {
      cyc.vertices.push_back(cur);
      vertex_t next = local[cur][0] == prev ? local[cur][1] : local[cur][0];
      prev = cur;
      cur = next;
    }
    cyc.position.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cyc.vertices.size(); ++i) cyc.position[cyc.vertices[i]] = static_cast<int>(i);

    // G_v(C): components of G - E(C), one per cycle vertex.
    cyc.branch_owner.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
      std::queue<vertex_t> q;
      q.push(cyc.vertices[i]);
      cyc.branch_owner[cyc.vertices[i]] = static_cast<int>(i);
      while (!q.empty()) {
        vertex_t u = q.front();
        q.pop();
        for (vertex_t w : g.neighbors(u)) {
          if (cyc.branch_owner[w] != -1) continue;
          if (cyc.position[u] >= 0 && cyc.position[w] >= 0) continue;  // cycle edge
          cyc.branch_owner[w] = static_cast<int>(i);
          q.push(w);
        }
      }
    }
    for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
      vertex_t v = cyc.vertices[i];
      bool active = g.degree(v) >= 4;
      for (vertex_t x = 0; x < n && !active; ++x)
        if (x != v && cyc.branch_owner[x] == static_cast<int>(i) && g.degree(x) >= 3) active = true;
      if (active) cyc.branch_active.push_back(v);
    }
    std::sort(cyc.branch_active.begin(), cyc.branch_active.end());
    cyc.threads_at.assign(cyc.vertices.size(), {});
    for (std::size_t t = 0; t < p.threads.threads.size(); ++t) {
      int pos = cyc.position[p.threads.threads[t].anchor];
      if (pos >= 0) cyc.threads_at[pos].push_back(static_cast<int>(t));
    }
    for (vertex_t v : cyc.vertices) p.cycles_at[v].push_back(static_cast<int>(p.cycles.size()));
    p.cycles.push_back(std::move(cyc));
  }
  p.B = compute_B(p.cycles);
  return p;
}

// ---------------------------------------------------------------------------
// BBR sets

/// A vertex set together with its S-activity on every cycle.
struct BbrSet {
  std::vector<vertex_t> set;                 // sorted
  std::vector<std::vector<int>> active;      // per cycle: sorted indices of S-active vertices
  std::vector<int> a;                        // per cycle: a_S(C)
  std::vector<bool> thread_free;             // per thread: contains no vertex of S
};

inline BbrSet with_activity(const CactusProfile& p, std::vector<vertex_t> s) {
  std::sort(s.begin(), s.end());
  BbrSet out;
  out.set = std::move(s);
  for (const auto& cyc : p.cycles) {
    std::vector<bool> mark(cyc.vertices.size(), false);
    for (vertex_t v : out.set) mark[cyc.branch_owner[v]] = true;
    std::vector<int> act;
    for (std::size_t i = 0; i < mark.size(); ++i)
      if (mark[i]) act.push_back(static_cast<int>(i));
    out.a.push_back(static_cast<int>(act.size()));
    out.active.push_back(std::move(act));
  }
  out.thread_free.assign(p.threads.threads.size(), true);
  for (vertex_t v : out.set)
    if (p.threads.thread_of[v] >= 0) out.thread_free[p.threads.thread_of[v]] = false;
  return out;
}

struct BbrCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline BbrCheck check_bbr(const CactusProfile& p, const BbrSet& s) {
  for (int i = 0; i < p.c(); ++i) {
    if (s.a[i] < 2) {
      return {false, "not biactive: cycle " + std::to_string(i) + " has " + std::to_string(s.a[i]) + " S-active vertices"};
    }
  }
  std::map<vertex_t, int> free_at;
  for (std::size_t t = 0; t < p.threads.threads.size(); ++t) {
    if (!s.thread_free[t]) continue;
    vertex_t anchor = p.threads.threads[t].anchor;
    if (++free_at[anchor] >= 2) {
      return {false, "not branch-resolving: two S-free threads hang at vertex " + std::to_string(anchor)};
    }
  }
  return {};
}

inline BbrCheck is_bbr(const Graph& g, std::span<const vertex_t> s) {
  detail::check_vertex_set(g, s);
  auto p = cactus_profile(g);
  return check_bbr(p, with_activity(p, {s.begin(), s.end()}));
}

struct BbrOptions {
  std::size_t cap = 1'000'000;  // candidate subsets examined
  bool verify_minimality = true;
};

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > (std::uint64_t{1} << 62)) return r;
  }
  return r;
}

/// Calls fn for every k-subset of 0..n-1 in lexicographic order; stops when fn returns false.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<vertex_t> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<vertex_t>&>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// All BBR sets of size L(G)+B(G), in lexicographic order.
inline void for_each_smallest_bbr(const Graph& g, const CactusProfile& p, const BbrOptions& opt,
                                  const std::function<void(const BbrSet&)>& visit) {
  if (p.c() == 0) throw graph_error("BBR machinery needs a graph with at least one cycle");
  const int n = g.order();
  const int k = p.L + p.B;
  if (detail::binomial(n, k) > opt.cap) {
    throw cap_exceeded_error("BBR enumeration of C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceeds cap");
  }
  if (opt.verify_minimality && k > 0 && detail::binomial(n, k - 1) <= opt.cap) {
    detail::for_each_combination(n, k - 1, [&](const std::vector<vertex_t>& s) {
      if (check_bbr(p, with_activity(p, s))) throw std::logic_error("a BBR set smaller than L(G)+B(G) exists");
      return true;
    });
  }
  detail::for_each_combination(n, k, [&](const std::vector<vertex_t>& s) {
    BbrSet b = with_activity(p, s);
    if (check_bbr(p, b)) visit(b);
    return true;
  });
}

inline std::vector<BbrSet> enumerate_smallest_bbr(const Graph& g, const BbrOptions& opt = {}) {
  auto p = cactus_profile(g);
  std::vector<BbrSet> out;
  for_each_smallest_bbr(g, p, opt, [&](const BbrSet& b) { out.push_back(b); });
  return out;
}

// ---------------------------------------------------------------------------
// Cycle frames

struct CycleLabeling {
  std::vector<vertex_t> order;     // v_0 .. v_{g-1}
  std::vector<int> active_labels;  // sorted labels i with v_i S-active
};

struct CycleFrame {
  int cycle = -1;
  int k = 0;
  int a_S = 0;
  std::vector<CycleLabeling> labelings;  // every labeling attaining the minimal k; [0] is the tie-break winner
  std::vector<vertex_t> s_path;          // v_1 .. v_k of labelings[0]

  int girth() const { return labelings.empty() ? 0 : static_cast<int>(labelings[0].order.size()); }
};

inline CycleFrame cycle_frame(const CactusProfile& p, int cycle, const BbrSet& s) {
  const CactusCycle& cyc = p.cycles[cycle];
  const auto& act = s.active[cycle];
  const int g = cyc.girth();
  const int a = static_cast<int>(act.size());
  if (a < 2) throw graph_error("cycle_frame: S is not biactive on cycle " + std::to_string(cycle));
  int max_gap = 0;
  for (int j = 0; j < a; ++j) max_gap = std::max(max_gap, (act[(j + 1) % a] - act[j] + g) % g);

  CycleFrame f;
  f.cycle = cycle;
  f.k = g - max_gap;
  f.a_S = a;
  auto make = [&](int start, int step) {
    CycleLabeling lab;
    lab.order.resize(static_cast<std::size_t>(g));
    for (int t = 0; t < g; ++t) lab.order[t] = cyc.vertices[((start + step * t) % g + g) % g];
    for (int pos : act) lab.active_labels.push_back(((pos - start) * step % g + g) % g);
    std::sort(lab.active_labels.begin(), lab.active_labels.end());
    return lab;
  };
  for (int j = 0; j < a; ++j) {
    int from = act[j];
    int to = act[(j + 1) % a];
    if ((to - from + g) % g != max_gap) continue;
    f.labelings.push_back(make(to, +1));
    f.labelings.push_back(make(from, -1));
  }
  std::sort(f.labelings.begin(), f.labelings.end(), [](const CycleLabeling& x, const CycleLabeling& y) {
    return std::tie(x.active_labels, x.order) < std::tie(y.active_labels, y.order);
  });
  f.labelings.erase(std::unique(f.labelings.begin(), f.labelings.end(),
                                [](const CycleLabeling& x, const CycleLabeling& y) { return x.order == y.order; }),
                    f.labelings.end());
  const auto& best = f.labelings.front().order;
  f.s_path.assign(best.begin() + 1, best.begin() + 1 + f.k);
  return f;
}

// ---------------------------------------------------------------------------
// Configurations

/// How the length of a thread u_1..u_k is measured in configurations C and E.
enum class ThreadLength { vertex_count, edge_count };

inline constexpr ThreadLength thread_length_convention = ThreadLength::vertex_count;

struct ConfigWitness {
  int labeling = -1;
  int index = -1;   // label i of the cycle vertex the thread hangs at
  int thread = -1;
};

struct ConfigFlags {
  bool A = false, B = false, C = false, D = false, E = false;

  bool any_abc() const { return A || B || C; }
  bool any_ade() const { return A || D || E; }
  bool any(DimensionMode m) const { return m == DimensionMode::vertex ? any_abc() : any_ade(); }
  friend bool operator==(const ConfigFlags&, const ConfigFlags&) = default;
};

struct ConfigReport {
  ConfigFlags flags;                            // disjunction over all minimal-k labelings
  std::optional<ConfigWitness> A, B, C, D, E;   // first witnessing labeling/thread per flag
  bool labelings_agree = true;                  // per-labeling flags identical
};

namespace detail {

struct ThreadAt {
  int thread;
  int length;
};

inline ConfigFlags evaluate_labeling(const CactusProfile& p, const CycleFrame& f, const CycleLabeling& lab, const BbrSet& s,
                                     ThreadLength conv, int labeling_index, ConfigReport* report) {
  const CactusCycle& cyc = p.cycles[f.cycle];
  const int g = f.girth();
  const int k = f.k;
  const int a = f.a_S;
  const int fl = g / 2;
  const int ce = (g + 1) / 2;
  const bool even = g % 2 == 0;

  // S-free threads hanging at label i
  auto free_threads = [&](int i) {
    std::vector<ThreadAt> out;
    vertex_t v = lab.order[((i % g) + g) % g];
    for (int t : cyc.threads_at[cyc.position[v]]) {
      if (!s.thread_free[t]) continue;
      int len = p.threads.threads[t].length() - (conv == ThreadLength::edge_count ? 1 : 0);
      out.push_back({t, len});
    }
    return out;
  };
  auto in_ranges = [&](int i, int lo1, int hi1, int lo2, int hi2) {
    return i == 0 || (i >= lo1 && i <= hi1) || (i >= lo2 && i <= hi2);
  };

  ConfigFlags fl_out;
  auto note = [&](std::optional<ConfigWitness>& slot, int i, int t) {
    if (report && !slot) slot = ConfigWitness{labeling_index, i, t};
  };

  if (a == 2 && even && k == g / 2) {
    fl_out.A = true;
    if (report) note(report->A, -1, -1);
  }
  for (int i = 0; i < g; ++i) {
    auto threads = free_threads(i);
    if (threads.empty()) continue;
    if (k <= fl - 1 && in_ranges(i, k, fl - 1, ce + k + 1, g - 1)) {
      fl_out.B = true;
      if (report) note(report->B, i, threads.front().thread);
    }
    if (k <= ce - 1 && in_ranges(i, k, ce - 1, fl + k + 1, g - 1)) {
      fl_out.D = true;
      if (report) note(report->D, i, threads.front().thread);
    }
    if (i > k) continue;
    for (const auto& t : threads) {
      if (a == 2 && even && k <= g / 2 && t.length >= g / 2 - k) {
        fl_out.C = true;
        if (report) note(report->C, i, t.thread);
      }
      if (a == 2 && t.length >= fl - k + 1) {
        bool partner = true;
        if (even) {
          int j = g / 2 + k - i;
          auto other = free_threads(j);
          partner = std::any_of(other.begin(), other.end(), [&](const ThreadAt& o) { return o.thread != t.thread; });
        }
        if (partner) {
          fl_out.E = true;
          if (report) note(report->E, i, t.thread);
        }
      }
    }
  }
  return fl_out;
}

}  // namespace detail

/// Configurations A-E on one cycle w.r.t. a BBR set, over every minimal-k labeling.
inline ConfigReport detect_configs(const CactusProfile& p, const CycleFrame& f, const BbrSet& s,
                                   ThreadLength conv = thread_length_convention) {
  ConfigReport r;
  std::optional<ConfigFlags> first;
  for (std::size_t li = 0; li < f.labelings.size(); ++li) {
    ConfigFlags fl = detail::evaluate_labeling(p, f, f.labelings[li], s, conv, static_cast<int>(li), &r);
    if (!first) first = fl;
    else if (!(fl == *first)) r.labelings_agree = false;
    r.flags.A |= fl.A;
    r.flags.B |= fl.B;
    r.flags.C |= fl.C;
    r.flags.D |= fl.D;
    r.flags.E |= fl.E;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Critical vertices

/// Largest S-path length at which an end-vertex is vertex- (floor) or edge-critical (ceiling).
inline int critical_bound(int girth, DimensionMode mode) {
  return mode == DimensionMode::vertex ? girth / 2 - 1 : (girth + 1) / 2 - 1;
}

/// End-vertices of the S-path under any minimal-k labeling, when |P| = k meets the mode's bound.
inline std::vector<vertex_t> critical_vertices(const CycleFrame& f, DimensionMode mode) {
  std::vector<vertex_t> out;
  if (f.k == 0) return out;  // no S-path
  if (f.k > critical_bound(f.girth(), mode)) return out;
  for (const auto& lab : f.labelings) {
    out.push_back(lab.order[1]);
    out.push_back(lab.order[f.k]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cactusdim
