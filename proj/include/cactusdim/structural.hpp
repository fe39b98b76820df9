// Structural metric dimensions of cacti:
//   dim(G)  = L(G) + B(G) + c_ABC(G) + tau(G_vi)
//   edim(G) = L(G) + B(G) + c_ADE(G) + tau(G_ei)
// with every summand derived from an exhaustive scan of the smallest BBR sets.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cactus.hpp"
#include "exact_dim.hpp"
#include "vertex_cover.hpp"

namespace cactusdim {

struct StructuralOptions {
  BbrOptions bbr;
  ThreadLength thread_length = thread_length_convention;
};

/// Everything the formula needs to know about one smallest BBR set.
struct BbrAnalysis {
  BbrSet set;
  std::vector<CycleFrame> frames;
  std::vector<ConfigReport> configs;
  std::vector<std::vector<vertex_t>> vertex_critical;  // per cycle
  std::vector<std::vector<vertex_t>> edge_critical;    // per cycle

  const std::vector<std::vector<vertex_t>>& critical(DimensionMode m) const {
    return m == DimensionMode::vertex ? vertex_critical : edge_critical;
  }
};

inline BbrAnalysis analyze_bbr(const CactusProfile& p, const BbrSet& s, ThreadLength conv = thread_length_convention) {
  BbrAnalysis a;
  a.set = s;
  for (int i = 0; i < p.c(); ++i) {
    a.frames.push_back(cycle_frame(p, i, s));
    a.configs.push_back(detect_configs(p, a.frames.back(), s, conv));
    a.vertex_critical.push_back(critical_vertices(a.frames.back(), DimensionMode::vertex));
    a.edge_critical.push_back(critical_vertices(a.frames.back(), DimensionMode::edge));
  }
  return a;
}

/// Pairs (i < j) of cycles sharing a vertex that is critical on both.
inline std::vector<std::pair<int, int>> critical_incidences(const CactusProfile& p, const BbrAnalysis& a, DimensionMode mode) {
  std::vector<std::pair<int, int>> out;
  const auto& crit = a.critical(mode);
  for (int i = 0; i < p.c(); ++i) {
    for (int j = i + 1; j < p.c(); ++j) {
      vertex_t v = p.shared_vertex(i, j);
      if (v < 0) continue;
      if (std::binary_search(crit[i].begin(), crit[i].end(), v) && std::binary_search(crit[j].begin(), crit[j].end(), v))
        out.emplace_back(i, j);
    }
  }
  return out;
}

/// Vertex per cycle; edges join cycle pairs that are both negative and critically incident.
inline Graph incidence_graph(const CactusProfile& p, const BbrAnalysis& nice, const std::vector<bool>& positive,
                             DimensionMode mode) {
  std::vector<Edge> edges;
  for (auto [i, j] : critical_incidences(p, nice, mode))
    if (!positive[i] && !positive[j]) edges.emplace_back(i, j);
  return Graph(std::max(1, p.c()), std::move(edges));
}

struct ModeAnalysis {
  std::vector<bool> positive;  // per cycle: ABC- (vertex) or ADE-positive (edge)
  int positive_count = 0;
  bool compatible = true;      // one smallest BBR set frees every negative cycle at once
  int nice = -1;               // index into CactusAnalysis::bbr_sets()
  std::vector<std::pair<int, int>> incident_pairs;  // under the nice set, all cycles
  std::optional<Graph> incidence;
  VertexCover cover;
};

/// Exhaustive scan of the smallest BBR sets of a cactus with at least one cycle.
class CactusAnalysis {
 public:
  explicit CactusAnalysis(const Graph& g, const StructuralOptions& opt = {}) : profile_(cactus_profile(g)) {
    require_connected(g);
    if (profile_.c() == 0) throw graph_error("structural formula needs at least one cycle (trees are out of scope)");
    for_each_smallest_bbr(g, profile_, opt.bbr, [&](const BbrSet& s) {
      sets_.push_back(analyze_bbr(profile_, s, opt.thread_length));
      const auto& a = sets_.back();
      for (int i = 0; i < profile_.c(); ++i) {
        if (!a.configs[i].labelings_agree) {
          diagnostics_.push_back("configuration flags differ between minimal-k labelings of cycle " + std::to_string(i) +
                                 " for S=" + format_set(a.set.set));
        }
        if (a.frames[i].k == 0) diagnostics_.push_back("empty S-path on cycle " + std::to_string(i));
      }
    });
    if (sets_.empty()) throw std::logic_error("cactus has no BBR set of size L(G)+B(G)");
    modes_[0] = analyze_mode(DimensionMode::vertex);
    modes_[1] = analyze_mode(DimensionMode::edge);
  }

  const CactusProfile& profile() const { return profile_; }
  const std::vector<BbrAnalysis>& bbr_sets() const { return sets_; }
  const ModeAnalysis& mode(DimensionMode m) const { return modes_[m == DimensionMode::vertex ? 0 : 1]; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  static std::string format_set(const std::vector<vertex_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  }

 private:
  ModeAnalysis analyze_mode(DimensionMode mode) {
    const int c = profile_.c();
    ModeAnalysis m;
    m.positive.assign(static_cast<std::size_t>(c), true);
    for (const auto& a : sets_)
      for (int i = 0; i < c; ++i)
        if (!a.configs[i].flags.any(mode)) m.positive[i] = false;
    m.positive_count = static_cast<int>(std::count(m.positive.begin(), m.positive.end(), true));

    auto frees_negatives = [&](const BbrAnalysis& a) {
      for (int i = 0; i < c; ++i)
        if (!m.positive[i] && a.configs[i].flags.any(mode)) return false;
      return true;
    };
    auto freed_count = [&](const BbrAnalysis& a) {
      int freed = 0;
      for (int i = 0; i < c; ++i)
        if (!m.positive[i] && !a.configs[i].flags.any(mode)) ++freed;
      return freed;
    };

    m.compatible = std::any_of(sets_.begin(), sets_.end(), frees_negatives);
    if (!m.compatible) {
      diagnostics_.push_back(std::string("no single smallest BBR set frees every ") +
                             (mode == DimensionMode::vertex ? "ABC" : "ADE") + "-negative cycle");
    }
    // Nice set: keep the negatives configuration-free, then minimize critical incidences.
    int best_freed = -1;
    std::size_t best_pairs = 0;
    for (std::size_t idx = 0; idx < sets_.size(); ++idx) {
      int freed = freed_count(sets_[idx]);
      std::size_t pairs = critical_incidences(profile_, sets_[idx], mode).size();
      if (freed > best_freed || (freed == best_freed && pairs < best_pairs)) {
        best_freed = freed;
        best_pairs = pairs;
        m.nice = static_cast<int>(idx);
      }
    }
    const BbrAnalysis& nice = sets_[static_cast<std::size_t>(m.nice)];
    m.incident_pairs = critical_incidences(profile_, nice, mode);
    m.incidence = incidence_graph(profile_, nice, m.positive, mode);
    m.cover = vertex_cover_number(*m.incidence);
    return m;
  }

  CactusProfile profile_;
  std::vector<BbrAnalysis> sets_;
  ModeAnalysis modes_[2];
  std::vector<std::string> diagnostics_;
};

struct CycleClassification {
  std::vector<bool> positive;
  int positive_count = 0;
  bool compatible = true;
  std::vector<std::string> diagnostics;
};

inline CycleClassification classify_cycles(const Graph& g, DimensionMode mode, const StructuralOptions& opt = {}) {
  if (mode == DimensionMode::mixed) throw graph_error("cycle classification is defined for vertex and edge modes only");
  CactusAnalysis a(g, opt);
  const auto& m = a.mode(mode);
  return {m.positive, m.positive_count, m.compatible, a.diagnostics()};
}

struct NiceBbr {
  BbrSet set;
  std::vector<std::pair<int, int>> incident_pairs;
};

inline NiceBbr nice_bbr(const Graph& g, DimensionMode mode, const StructuralOptions& opt = {}) {
  if (mode == DimensionMode::mixed) throw graph_error("nice BBR sets are defined for vertex and edge modes only");
  CactusAnalysis a(g, opt);
  const auto& m = a.mode(mode);
  return {a.bbr_sets()[static_cast<std::size_t>(m.nice)].set, m.incident_pairs};
}

struct DimensionBreakdown {
  int c = 0;
  int L = 0;
  int B = 0;
  std::vector<int> b;            // per cycle
  std::vector<int> girth;        // per cycle
  std::vector<bool> end_cycle;   // per cycle
  std::vector<bool> abc_positive, ade_positive;
  int c_abc = 0;
  int c_ade = 0;
  int tau_vi = 0;
  int tau_ei = 0;
  int dim_formula = 0;
  int edim_formula = 0;
  BbrSet nice_set_vertex;
  BbrSet nice_set_edge;
  Graph g_vi{1};
  Graph g_ei{1};
  VertexCover cover_vi, cover_ei;
  // L + 2c bound and its equality prediction (every cycle a positive end-cycle)
  int old_bound = 0;
  bool dim_attains_old_bound = false;
  bool edim_attains_old_bound = false;
  std::vector<std::string> diagnostics;
};

inline DimensionBreakdown breakdown_from(const CactusAnalysis& a) {
  const auto& p = a.profile();
  const auto& mv = a.mode(DimensionMode::vertex);
  const auto& me = a.mode(DimensionMode::edge);
  DimensionBreakdown d;
  d.c = p.c();
  d.L = p.L;
  d.B = p.B;
  for (const auto& cyc : p.cycles) {
    d.b.push_back(cyc.b());
    d.girth.push_back(cyc.girth());
    d.end_cycle.push_back(cyc.end_cycle());
  }
  d.abc_positive = mv.positive;
  d.ade_positive = me.positive;
  d.c_abc = mv.positive_count;
  d.c_ade = me.positive_count;
  d.tau_vi = mv.cover.size;
  d.tau_ei = me.cover.size;
  d.dim_formula = d.L + d.B + d.c_abc + d.tau_vi;
  d.edim_formula = d.L + d.B + d.c_ade + d.tau_ei;
  d.nice_set_vertex = a.bbr_sets()[static_cast<std::size_t>(mv.nice)].set;
  d.nice_set_edge = a.bbr_sets()[static_cast<std::size_t>(me.nice)].set;
  d.g_vi = *mv.incidence;
  d.g_ei = *me.incidence;
  d.cover_vi = mv.cover;
  d.cover_ei = me.cover;
  d.old_bound = d.L + 2 * d.c;
  auto all_positive_end = [&](const std::vector<bool>& pos) {
    for (int i = 0; i < d.c; ++i)
      if (!pos[i] || !d.end_cycle[i]) return false;
    return true;
  };
  d.dim_attains_old_bound = all_positive_end(mv.positive);
  d.edim_attains_old_bound = all_positive_end(me.positive);
  d.diagnostics = a.diagnostics();
  return d;
}

/// Both structural formulas with every summand and the sets used.
inline DimensionBreakdown structural_dimensions(const Graph& g, const StructuralOptions& opt = {}) {
  return breakdown_from(CactusAnalysis(g, opt));
}

// ---------------------------------------------------------------------------
// Nearly-extremal and leafless-extremal classification

inline bool is_daisy(const Graph& g, const CactusProfile& p) {
  if (p.c() < 2) return false;
  for (vertex_t v = 0; v < g.order(); ++v) {
    if (static_cast<int>(p.cycles_at[v].size()) != p.c()) continue;
    int on_cycles = 1;
    for (const auto& cyc : p.cycles) on_cycles += cyc.girth() - 1;
    return on_cycles == g.order() && g.size() == g.order() - 1 + p.c();
  }
  return false;
}

struct ExtremalClassification {
  int c = 0;
  int L = 0;
  bool leafless = false;
  bool is_daisy = false;
  bool has_odd_petal = false;
  bool all_end_cycles = false;
  int end_cycles = 0;
  int nearly_bound = 0;  // L + 2c - 1

  // Conditions for dim = L+2c-1 (resp. edim): every cycle an end-cycle with the negatives
  // pairwise critically incident (at least one negative), or exactly c-1 end-cycles and
  // every cycle positive.
  bool predicted_dim_nearly = false;
  bool predicted_edim_nearly = false;
  // Same conditions read with vertex-critical incidence for the edge case.
  bool predicted_edim_nearly_vertex_incidence = false;
  bool predicted_leafless_dim_equal = false;   // daisy without odd petals
  bool predicted_leafless_edim_equal = false;  // daisy

  int dim_exact = 0;
  int edim_exact = 0;
  bool dim_nearly = false;
  bool edim_nearly = false;

  DimensionBreakdown breakdown;
  std::vector<std::string> findings;  // predictions contradicted by exact values
  std::vector<std::string> notes;     // informational only
};

namespace detail {

inline bool negatives_pairwise_incident(const std::vector<bool>& positive, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> neg;
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (!positive[i]) neg.push_back(static_cast<int>(i));
  if (neg.empty()) return false;
  for (std::size_t x = 0; x < neg.size(); ++x)
    for (std::size_t y = x + 1; y < neg.size(); ++y)
      if (std::find(pairs.begin(), pairs.end(), std::make_pair(neg[x], neg[y])) == pairs.end()) return false;
  return true;
}

}  // namespace detail

/// Classification from an existing analysis and known exact dimensions.
inline ExtremalClassification extremal_classification(const Graph& g, const CactusAnalysis& a, int dim, int edim) {
  const auto& p = a.profile();
  if (p.c() < 2) throw graph_error("extremal classification needs at least two cycles");
  ExtremalClassification r;
  r.c = p.c();
  r.L = p.L;
  r.leafless = degree_stats(g).min_degree >= 2;
  r.is_daisy = is_daisy(g, p);
  for (const auto& cyc : p.cycles) {
    if (cyc.girth() % 2 == 1) r.has_odd_petal = r.is_daisy;
    if (cyc.end_cycle()) ++r.end_cycles;
  }
  r.all_end_cycles = r.end_cycles == r.c;
  r.nearly_bound = r.L + 2 * r.c - 1;

  const auto& mv = a.mode(DimensionMode::vertex);
  const auto& me = a.mode(DimensionMode::edge);
  auto predict = [&](const ModeAnalysis& m, const std::vector<std::pair<int, int>>& incid) {
    bool first = r.all_end_cycles && detail::negatives_pairwise_incident(m.positive, incid);
    bool second = r.end_cycles == r.c - 1 && m.positive_count == r.c;
    return first || second;
  };
  r.predicted_dim_nearly = predict(mv, mv.incident_pairs);
  r.predicted_edim_nearly = predict(me, me.incident_pairs);
  r.predicted_edim_nearly_vertex_incidence =
      predict(me, critical_incidences(p, a.bbr_sets()[static_cast<std::size_t>(me.nice)], DimensionMode::vertex));
  r.predicted_leafless_dim_equal = r.is_daisy && !r.has_odd_petal;
  r.predicted_leafless_edim_equal = r.is_daisy;

  r.dim_exact = dim;
  r.edim_exact = edim;
  r.dim_nearly = r.dim_exact == r.nearly_bound;
  r.edim_nearly = r.edim_exact == r.nearly_bound;
  r.breakdown = breakdown_from(a);

  if (r.predicted_dim_nearly != r.dim_nearly) r.findings.push_back("dim nearly-extremal prediction disagrees with exact value");
  if (r.predicted_edim_nearly != r.edim_nearly) r.findings.push_back("edim nearly-extremal prediction disagrees with exact value");
  if (r.predicted_edim_nearly_vertex_incidence != r.edim_nearly)
    r.notes.push_back("edim prediction read with vertex-critical incidence disagrees with exact value");
  if (r.leafless) {
    if (r.predicted_leafless_dim_equal != (r.dim_exact == 2 * r.c - 1))
      r.findings.push_back("leafless dim equality disagrees with the daisy-without-odd-petals characterization");
    if (r.predicted_leafless_edim_equal != (r.edim_exact == 2 * r.c - 1))
      r.findings.push_back("leafless edim equality disagrees with the daisy characterization");
  }
  return r;
}

inline ExtremalClassification extremal_classification(const Graph& g, const StructuralOptions& opt = {},
                                                      const SolverOptions& solver = {}) {
  CactusAnalysis a(g, opt);
  if (a.profile().c() < 2) throw graph_error("extremal classification needs at least two cycles");
  return extremal_classification(g, a, exact_dimension(g, DimensionMode::vertex, solver).size,
                                 exact_dimension(g, DimensionMode::edge, solver).size);
}

}  // namespace cactusdim
