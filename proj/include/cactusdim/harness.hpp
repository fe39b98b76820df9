// Scan campaigns: corpus sources, per-graph checks, JSON Lines records and a summary.
#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "block_reduction.hpp"
#include "enumerate.hpp"
#include "exact_dim.hpp"
#include "graph6.hpp"
#include "serialize.hpp"
#include "structural.hpp"

namespace cactusdim {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Check { conjecture34, formula, extremal, blocks, delta3 };

inline const char* to_string(Check c) {
  switch (c) {
    case Check::conjecture34: return "conjecture34";
    case Check::formula: return "formula";
    case Check::extremal: return "extremal";
    case Check::blocks: return "blocks";
    case Check::delta3: return "delta3";
  }
  return "?";
}

/// "all" expands to every check.
inline std::vector<Check> parse_checks(std::string_view s) {
  if (s == "all") return {Check::conjecture34, Check::formula, Check::extremal, Check::blocks, Check::delta3};
  for (Check c : {Check::conjecture34, Check::formula, Check::extremal, Check::blocks, Check::delta3})
    if (s == to_string(c)) return {c};
  throw usage_error("unknown check '" + std::string(s) + "'");
}

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "?";
}

struct ScanFilters {
  bool connected = false;
  int min_degree = 0;
  bool cactus_only = false;
  bool exclude_cycles = false;
  bool any() const { return connected || min_degree > 0 || cactus_only || exclude_cycles; }

  void add(std::string_view name) {
    if (name == "connected") connected = true;
    else if (name == "min-degree-2" || name == "delta2") min_degree = std::max(min_degree, 2);
    else if (name == "min-degree-3" || name == "delta3") min_degree = std::max(min_degree, 3);
    else if (name == "cactus-only" || name == "cactus") cactus_only = true;
    else if (name == "exclude-cycles") exclude_cycles = true;
    else throw usage_error("unknown filter '" + std::string(name) + "'");
  }

  bool accepts(const Graph& g) const {
    bool conn = is_connected(g);
    if ((connected || cactus_only) && !conn) return false;
    if (min_degree > 0 && cactusdim::min_degree(g) < min_degree) return false;
    if (exclude_cycles && is_cycle_graph(g)) return false;
    if (cactus_only && !is_cactus(g)) return false;
    return true;
  }

  GraphFilter generator_filter() const { return {min_degree, cactus_only, exclude_cycles}; }
};

struct ScanSource {
  enum class Kind { enumerate, file, random } kind = Kind::enumerate;
  int max_n = 0;  // enumerate: orders 1..max_n
  std::string path;
  int n_lo = 0, n_hi = 0, m_lo = 0, m_hi = 0;
  long count = 0;
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline long parse_long(std::string_view s, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw usage_error(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

inline std::pair<int, int> parse_range(std::string_view s, const char* what) {
  auto dash = s.find('-');
  if (dash == std::string_view::npos) {
    int v = static_cast<int>(parse_long(s, what));
    return {v, v};
  }
  return {static_cast<int>(parse_long(s.substr(0, dash), what)), static_cast<int>(parse_long(s.substr(dash + 1), what))};
}

}  // namespace detail

/// enumerate:N | file:PATH | random:N,M,COUNT,SEED where N and M may be ranges LO-HI.
inline ScanSource parse_source(std::string_view s) {
  ScanSource src;
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw usage_error("source must look like kind:argument");
  std::string_view kind = s.substr(0, colon), arg = s.substr(colon + 1);
  if (kind == "enumerate") {
    src.kind = ScanSource::Kind::enumerate;
    src.max_n = static_cast<int>(detail::parse_long(arg, "order"));
    if (src.max_n < 1) throw usage_error("enumeration order must be positive");
  } else if (kind == "file") {
    src.kind = ScanSource::Kind::file;
    src.path = std::string(arg);
    if (src.path.empty()) throw usage_error("file source needs a path");
  } else if (kind == "random") {
    src.kind = ScanSource::Kind::random;
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= arg.size(); ++i)
      if (i == arg.size() || arg[i] == ',') {
        parts.push_back(arg.substr(start, i - start));
        start = i + 1;
      }
    if (parts.size() != 4) throw usage_error("random source needs n,m,count,seed");
    std::tie(src.n_lo, src.n_hi) = detail::parse_range(parts[0], "n");
    std::tie(src.m_lo, src.m_hi) = detail::parse_range(parts[1], "m");
    src.count = detail::parse_long(parts[2], "count");
    src.seed = static_cast<std::uint64_t>(detail::parse_long(parts[3], "seed"));
    if (src.n_lo < 3 || src.n_hi < src.n_lo || src.m_hi < src.m_lo || src.count < 0)
      throw usage_error("invalid random source ranges");
  } else {
    throw usage_error("unknown source kind '" + std::string(kind) + "'");
  }
  return src;
}

struct ScanCaps {
  std::size_t pair_cap = 2'000'000;
  std::size_t bbr_cap = 1'000'000;
  int time_budget_ms = 0;  // per graph; 0 = unlimited
};

struct ScanTask {
  ScanSource source;
  ScanFilters filters;
  std::vector<Check> checks;
  ScanCaps caps;
  int jobs = 1;
  bool mdim = false;
  bool timing = false;  // adds wall-clock fields, which makes reports non-reproducible

  void validate() const {
    if (!filters.any()) throw usage_error("at least one filter is required");
    if (checks.empty()) throw usage_error("at least one check is required");
    if (source.kind == ScanSource::Kind::random && !source.seed) throw usage_error("random sources need a seed");
    if (jobs < 1) throw usage_error("jobs must be positive");
  }
};

// ---------------------------------------------------------------------------
// Corpus

struct CorpusEntry {
  Graph graph{1};
  std::string graph6;
  long index = 0;
};

struct CorpusProblem {
  long line = 0;  // 1-based input line (file) or sample index (random)
  std::string text;
  std::string error;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusProblem> problems;
};

inline Corpus load_corpus(const ScanTask& task) {
  Corpus c;
  const auto& src = task.source;
  auto take = [&](const Graph& g) {
    if (task.filters.accepts(g)) c.entries.push_back({g, encode_graph6(g), static_cast<long>(c.entries.size())});
  };
  switch (src.kind) {
    case ScanSource::Kind::enumerate:
      for (int n = 1; n <= src.max_n; ++n) for_each_graph(n, task.filters.generator_filter(), take);
      break;
    case ScanSource::Kind::file: {
      std::ifstream in(src.path);
      if (!in) throw std::runtime_error("cannot open " + src.path);
      for (const auto& line : read_graph6_lines(in)) {
        try {
          take(parse_graph6(line.text));
        } catch (const std::exception& e) {
          c.problems.push_back({static_cast<long>(line.line_number), line.text, e.what()});
        }
      }
      break;
    }
    case ScanSource::Kind::random:
      for (long i = 0; i < src.count; ++i) {
        Rng rng(derive_seed(*src.seed, static_cast<std::uint64_t>(i)));
        int n = rng.uniform(src.n_lo, src.n_hi);
        int m_lo = std::max(src.m_lo, n), m_hi = std::min(src.m_hi, n * (n - 1) / 2);
        try {
          if (m_lo > m_hi) throw graph_error("no feasible edge count for n=" + std::to_string(n));
          int m = rng.uniform(m_lo, m_hi);
          take(random_min_degree_graph(n, m, rng.next()));
        } catch (const std::exception& e) {
          c.problems.push_back({i, "", e.what()});
        }
      }
      break;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Per-graph checks

inline std::string kappa_class(const Graph& g) {
  int n = g.order();
  if (n == 1 || !is_connected(g)) return "0";
  if (n == 2 || !block_decomposition(g).cut_vertices.empty()) return "1";
  if (n - 1 <= 2) return "2";
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b = a + 1; b < n; ++b) {
      std::vector<vertex_t> keep;
      for (vertex_t v = 0; v < n; ++v)
        if (v != a && v != b) keep.push_back(v);
      if (!is_connected(induced_subgraph(g, keep))) return "2";
    }
  return "3+";
}

struct CheckOutcome {
  Status status = Status::skipped;
  std::string reason;
  json details = json::object();
};

struct ScanRecord {
  std::string graph6;
  long index = 0;
  int n = 0, m = 0, c = 0, delta = 0;
  std::string kappa;
  std::optional<GeneratorWitness> dim, edim, mdim;
  std::vector<std::pair<Check, CheckOutcome>> checks;
  json extremal = nullptr;
  std::optional<double> timing_ms;

  bool failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.status == Status::fail; });
  }

  const CheckOutcome* outcome(Check c) const {
    for (const auto& [k, o] : checks)
      if (k == c) return &o;
    return nullptr;
  }

  json to_json() const {
    json j;
    j["graph6"] = graph6;
    j["n"] = n;
    j["m"] = m;
    j["c"] = c;
    j["delta"] = delta;
    j["kappa_class"] = kappa;
    j["dim"] = dim ? json(dim->size) : json(nullptr);
    j["edim"] = edim ? json(edim->size) : json(nullptr);
    if (mdim) j["mdim"] = mdim->size;
    j["bound"] = 2 * c - 1;
    json cj = json::object();
    for (const auto& [k, o] : checks) {
      json e;
      e["status"] = to_string(o.status);
      if (!o.reason.empty()) e["reason"] = o.reason;
      for (auto& [key, v] : o.details.items()) e[key] = v;
      cj[to_string(k)] = e;
    }
    j["checks"] = cj;
    j["extremal"] = extremal;
    json w = json::object();
    if (dim) w["dim"] = dim->set;
    if (edim) w["edim"] = edim->set;
    if (mdim) w["mdim"] = mdim->set;
    j["witnesses"] = w;
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
  }
};

struct CheckOptions {
  ScanCaps caps;
  bool mdim = false;
  bool timing = false;
};

namespace detail {

// Lazily computed, cap-aware values shared by the checks of one graph.
class GraphContext {
 public:
  GraphContext(const Graph& g, const CheckOptions& opt) : g_(g), opt_(opt) {
    solver_.pair_cap = opt.caps.pair_cap;
    if (opt.caps.time_budget_ms > 0)
      solver_.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opt.caps.time_budget_ms);
    structural_.bbr.cap = opt.caps.bbr_cap;
  }

  const Graph& graph() const { return g_; }
  const SolverOptions& solver() const { return solver_; }

  const GeneratorWitness* exact(DimensionMode mode) {
    auto& slot = exact_[static_cast<int>(mode)];
    if (!slot.tried) {
      slot.tried = true;
      try {
        slot.value = exact_dimension(g_, mode, solver_);
      } catch (const cap_exceeded_error& e) {
        slot.error = e.what();
      }
    }
    return slot.value ? &*slot.value : nullptr;
  }
  const std::string& exact_error(DimensionMode mode) const { return exact_[static_cast<int>(mode)].error; }

  const CactusAnalysis* analysis() {
    if (!analysis_tried_) {
      analysis_tried_ = true;
      try {
        analysis_.emplace(g_, structural_);
      } catch (const cap_exceeded_error& e) {
        analysis_error_ = e.what();
      }
    }
    return analysis_ ? &*analysis_ : nullptr;
  }
  const std::string& analysis_error() const { return analysis_error_; }

 private:
  struct Slot {
    bool tried = false;
    std::optional<GeneratorWitness> value;
    std::string error;
  };
  const Graph& g_;
  const CheckOptions& opt_;
  SolverOptions solver_;
  StructuralOptions structural_;
  Slot exact_[3];
  bool analysis_tried_ = false;
  std::optional<CactusAnalysis> analysis_;
  std::string analysis_error_;
};

inline CheckOutcome skipped(std::string reason) { return {Status::skipped, std::move(reason), json::object()}; }

inline std::optional<CheckOutcome> need_exact(GraphContext& ctx) {
  for (auto mode : {DimensionMode::vertex, DimensionMode::edge})
    if (!ctx.exact(mode)) return skipped("exact solver cap: " + ctx.exact_error(mode));
  return std::nullopt;
}

inline CheckOutcome run_conjecture(GraphContext& ctx) {
  const Graph& g = ctx.graph();
  if (!is_connected(g)) return skipped("precondition: graph is not connected");
  if (min_degree(g) < 2) return skipped("precondition: minimum degree below 2");
  if (is_cycle_graph(g)) return skipped("precondition: graph is a cycle");
  if (auto s = need_exact(ctx)) return *s;
  int bound = 2 * cyclomatic_number(g) - 1;
  int d = ctx.exact(DimensionMode::vertex)->size, e = ctx.exact(DimensionMode::edge)->size;
  CheckOutcome o;
  o.status = d <= bound && e <= bound ? Status::pass : Status::fail;
  o.details["dim_equals_bound"] = d == bound;
  o.details["edim_equals_bound"] = e == bound;
  if (o.status == Status::fail) {
    o.reason = "potential counterexample: metric dimension exceeds 2c-1";
    o.details["edges"] = edges_json(g);
    o.details["dim_generator"] = ctx.exact(DimensionMode::vertex)->set;
    o.details["edim_generator"] = ctx.exact(DimensionMode::edge)->set;
  }
  return o;
}

inline CheckOutcome run_formula(GraphContext& ctx) {
  const Graph& g = ctx.graph();
  if (!is_connected(g) || !is_cactus(g)) return skipped("precondition: not a connected cactus");
  if (cyclomatic_number(g) < 1) return skipped("precondition: no cycle");
  const CactusAnalysis* a = ctx.analysis();
  if (!a) return skipped("BBR cap: " + ctx.analysis_error());
  if (auto s = need_exact(ctx)) return *s;
  DimensionBreakdown d = breakdown_from(*a);
  const auto* dim = ctx.exact(DimensionMode::vertex);
  const auto* edim = ctx.exact(DimensionMode::edge);
  CheckOutcome o;
  o.status = d.dim_formula == dim->size && d.edim_formula == edim->size ? Status::pass : Status::fail;
  o.details["dim_formula"] = d.dim_formula;
  o.details["edim_formula"] = d.edim_formula;
  o.details["L"] = d.L;
  o.details["B"] = d.B;
  o.details["c_abc"] = d.c_abc;
  o.details["c_ade"] = d.c_ade;
  o.details["tau_vi"] = d.tau_vi;
  o.details["tau_ei"] = d.tau_ei;
  if (!d.diagnostics.empty()) o.details["diagnostics"] = d.diagnostics;
  if (o.status == Status::fail) {
    o.reason = "structural formula disagrees with exact solver";
    o.details["breakdown"] = breakdown_record(g, d, dim, edim);
  }
  return o;
}

inline CheckOutcome run_extremal(GraphContext& ctx, json& extremal_out) {
  const Graph& g = ctx.graph();
  if (!is_connected(g) || !is_cactus(g)) return skipped("precondition: not a connected cactus");
  int c = cyclomatic_number(g);
  if (c < 2) return skipped("precondition: fewer than two cycles");
  const CactusAnalysis* a = ctx.analysis();
  if (!a) return skipped("BBR cap: " + ctx.analysis_error());
  if (auto s = need_exact(ctx)) return *s;
  auto r = extremal_classification(g, *a, ctx.exact(DimensionMode::vertex)->size, ctx.exact(DimensionMode::edge)->size);
  extremal_out = extremal_json(r);
  CheckOutcome o;
  std::vector<std::string> failures;
  if (r.predicted_dim_nearly != r.dim_nearly) failures.push_back("dim nearly-extremal prediction");
  if (r.predicted_edim_nearly != r.edim_nearly) failures.push_back("edim nearly-extremal prediction");
  if (r.leafless) {
    if (r.dim_exact > 2 * c - 1 || r.edim_exact > 2 * c - 1) failures.push_back("leafless bound 2c-1 exceeded");
    if (r.predicted_leafless_dim_equal != (r.dim_exact == 2 * c - 1)) failures.push_back("leafless dim equality characterization");
    if (r.predicted_leafless_edim_equal != (r.edim_exact == 2 * c - 1)) failures.push_back("leafless edim equality characterization");
  }
  o.status = failures.empty() ? Status::pass : Status::fail;
  if (!failures.empty()) {
    o.reason = "classification disagrees with exact values";
    o.details["failures"] = failures;
    o.details["breakdown"] = breakdown_json(r.breakdown);
  }
  if (r.predicted_edim_nearly_vertex_incidence != r.edim_nearly)
    o.details["notes"] = json::array({"vertex-critical reading of the edge condition disagrees"});
  return o;
}

inline CheckOutcome run_blocks(GraphContext& ctx) {
  const Graph& g = ctx.graph();
  if (!is_connected(g)) return skipped("precondition: graph is not connected");
  CheckOutcome o;
  std::vector<std::string> failures;
  bool additive = cyclomatic_additivity_check(g);
  o.details["additive"] = additive;
  if (!additive) failures.push_back("cyclomatic additivity");
  if (min_degree(g) >= 2 && !is_cycle_graph(g)) {
    try {
      json certs = json::object();
      for (auto mode : {DimensionMode::vertex, DimensionMode::edge}) {
        auto cert = compose_generator(g, mode, ctx.solver());
        std::string tag(to_string(mode));
        if (!cert.verified) failures.push_back(tag + " composed set is not a generator");
        if (!cert.within_bound()) failures.push_back(tag + " composed set exceeds the block bound");
        if (!cert.gamma.is_forest() || !cert.gamma.leaves_are_blocks()) failures.push_back(tag + " block forest shape");
        if (!cert.gamma.selection_ok()) failures.push_back(tag + " edge selection");
        if (!disjoint_block_failures(g, cert.s, mode).empty()) failures.push_back(tag + " disjoint blocks left undistinguished");
        certs[tag] = certificate_json(cert);
      }
      auto chain = theorem_blocks_check(g, ctx.solver());
      if (!chain.chain_dim || !chain.chain_edim) failures.push_back("bound chain");
      if (!chain.strictness_dim || !chain.strictness_edim) failures.push_back("strictness premise");
      o.details["certificates"] = certs;
      o.details["chain"] = block_chain_json(chain);
    } catch (const cap_exceeded_error& e) {
      return skipped(std::string("exact solver cap: ") + e.what());
    }
  } else {
    o.details["composition"] = "not applicable";
  }
  o.status = failures.empty() ? Status::pass : Status::fail;
  if (!failures.empty()) {
    o.reason = "block machinery check failed";
    o.details["failures"] = failures;
  }
  return o;
}

inline CheckOutcome run_delta3(GraphContext& ctx) {
  const Graph& g = ctx.graph();
  if (!is_connected(g)) return skipped("precondition: graph is not connected");
  if (min_degree(g) < 3) return skipped("precondition: minimum degree below 3");
  if (auto s = need_exact(ctx)) return *s;
  Delta3Record r;
  r.n = g.order();
  r.m = g.size();
  r.c = cyclomatic_number(g);
  r.n_minus_1 = r.n - 1;
  r.two_c_minus_1 = 2 * r.c - 1;
  r.chain_holds = 2 * r.m >= 3 * r.n && r.n_minus_1 <= 2 * r.c - 2;
  r.dim = ctx.exact(DimensionMode::vertex)->size;
  r.edim = ctx.exact(DimensionMode::edge)->size;
  r.strict = r.dim < r.two_c_minus_1 && r.edim < r.two_c_minus_1;
  CheckOutcome o;
  o.status = r.chain_holds && r.strict ? Status::pass : Status::fail;
  o.details = delta3_json(r);
  if (o.status == Status::fail) o.reason = "strict bound for minimum degree 3 violated";
  return o;
}

}  // namespace detail

inline ScanRecord check_graph(const Graph& g, const std::vector<Check>& checks, const CheckOptions& opt = {}, long index = 0) {
  auto start = std::chrono::steady_clock::now();
  ScanRecord r;
  r.graph6 = encode_graph6(g);
  r.index = index;
  r.n = g.order();
  r.m = g.size();
  r.delta = min_degree(g);
  bool connected = is_connected(g);
  auto comp = connected_components(g);
  r.c = g.size() - g.order() + *std::max_element(comp.begin(), comp.end()) + 1;
  r.kappa = kappa_class(g);
  detail::GraphContext ctx(g, opt);
  for (Check c : checks) {
    CheckOutcome o;
    switch (c) {
      case Check::conjecture34: o = detail::run_conjecture(ctx); break;
      case Check::formula: o = detail::run_formula(ctx); break;
      case Check::extremal: o = detail::run_extremal(ctx, r.extremal); break;
      case Check::blocks: o = detail::run_blocks(ctx); break;
      case Check::delta3: o = detail::run_delta3(ctx); break;
    }
    r.checks.emplace_back(c, std::move(o));
  }
  if (connected) {
    if (const auto* w = ctx.exact(DimensionMode::vertex)) r.dim = *w;
    if (const auto* w = ctx.exact(DimensionMode::edge)) r.edim = *w;
    if (opt.mdim)
      if (const auto* w = ctx.exact(DimensionMode::mixed)) r.mdim = *w;
  }
  if (opt.timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline ScanRecord conjecture_check(const Graph& g, const CheckOptions& opt = {}) {
  return check_graph(g, {Check::conjecture34}, opt);
}

inline ScanRecord formula_crosscheck(const Graph& g, const CheckOptions& opt = {}) {
  return check_graph(g, {Check::formula}, opt);
}

// ---------------------------------------------------------------------------
// Scan

struct ScanSummary {
  json data;
  int exit_code = 0;
};

namespace detail {

inline ScanSummary summarize(const std::vector<ScanRecord>& records, const Corpus& corpus, const ScanTask& task) {
  json s;
  s["records"] = records.size();
  json malformed = json::array();
  for (const auto& p : corpus.problems) malformed.push_back({{"line", p.line}, {"text", p.text}, {"error", p.error}});
  s["malformed"] = malformed;

  json per_check = json::object();
  for (Check c : task.checks) per_check[to_string(c)] = {{"PASS", 0}, {"FAIL", 0}, {"SKIPPED", 0}};
  std::map<std::string, int> kappa;
  int dim_eq = 0, edim_eq = 0, both_eq = 0, dim_nearly = 0, edim_nearly = 0, leafless_dim_eq = 0, leafless_edim_eq = 0;
  int cacti = 0, leafless_cacti = 0, daisies = 0, even_daisies = 0;
  json census_violations = json::array();
  bool any_fail = false;
  for (const auto& r : records) {
    ++kappa[r.kappa];
    for (const auto& [c, o] : r.checks) per_check[to_string(c)][to_string(o.status)] = per_check[to_string(c)][to_string(o.status)].get<int>() + 1;
    any_fail = any_fail || r.failed();
    if (const auto* o = r.outcome(Check::conjecture34); o && o->status != Status::skipped) {
      bool d = r.dim->size == 2 * r.c - 1, e = r.edim->size == 2 * r.c - 1;
      dim_eq += d;
      edim_eq += e;
      both_eq += d && e;
    }
    if (!r.extremal.is_null()) {
      const json& x = r.extremal;
      ++cacti;
      dim_nearly += x["dim_nearly"].get<bool>();
      edim_nearly += x["edim_nearly"].get<bool>();
      if (x["leafless"].get<bool>()) {
        ++leafless_cacti;
        bool daisy = x["is_daisy"].get<bool>(), odd = x["has_odd_petal"].get<bool>();
        daisies += daisy;
        even_daisies += daisy && !odd;
        bool d = x["dim_exact"].get<int>() == 2 * r.c - 1, e = x["edim_exact"].get<int>() == 2 * r.c - 1;
        leafless_dim_eq += d;
        leafless_edim_eq += e;
        if (d && !(daisy && !odd)) census_violations.push_back({{"graph6", r.graph6}, {"issue", "dim equality outside even daisies"}});
        if (e && !daisy) census_violations.push_back({{"graph6", r.graph6}, {"issue", "edim equality outside daisies"}});
      }
    }
  }
  s["checks"] = per_check;
  s["kappa_class"] = kappa;
  s["equality"] = {{"dim_eq_2c_minus_1", dim_eq},
                   {"edim_eq_2c_minus_1", edim_eq},
                   {"both_eq_2c_minus_1", both_eq},
                   {"dim_eq_L_plus_2c_minus_1", dim_nearly},
                   {"edim_eq_L_plus_2c_minus_1", edim_nearly}};
  s["census"] = {{"classified_cacti", cacti},
                 {"leafless_cacti", leafless_cacti},
                 {"daisies", daisies},
                 {"daisies_without_odd_petal", even_daisies},
                 {"leafless_dim_eq_2c_minus_1", leafless_dim_eq},
                 {"leafless_edim_eq_2c_minus_1", leafless_edim_eq},
                 {"consistent", census_violations.empty()},
                 {"violations", census_violations}};
  ScanSummary out;
  out.exit_code = any_fail || !census_violations.empty() ? 1 : 0;
  s["exit_code"] = out.exit_code;
  out.data = std::move(s);
  return out;
}

}  // namespace detail

struct ScanResult {
  std::vector<ScanRecord> records;  // sorted by (graph6, corpus index)
  ScanSummary summary;
};

inline ScanResult run_scan(const ScanTask& task) {
  task.validate();
  Corpus corpus = load_corpus(task);
  CheckOptions opt{task.caps, task.mdim, task.timing};
  std::vector<ScanRecord> records(corpus.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.entries.size();) {
      const auto& e = corpus.entries[i];
      records[i] = check_graph(e.graph, task.checks, opt, e.index);
    }
  };
  int jobs = std::min<int>(task.jobs, std::max<std::size_t>(1, corpus.entries.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(records.begin(), records.end(),
            [](const ScanRecord& a, const ScanRecord& b) { return std::tie(a.graph6, a.index) < std::tie(b.graph6, b.index); });
  ScanResult r;
  r.summary = detail::summarize(records, corpus, task);
  r.records = std::move(records);
  return r;
}

/// Writes one JSON object per record to `out` and the summary object to `summary`.
inline int scan(const ScanTask& task, std::ostream& out, std::ostream& summary) {
  auto r = run_scan(task);
  for (const auto& rec : r.records) out << rec.to_json().dump() << '\n';
  summary << r.summary.data.dump() << '\n';
  return r.summary.exit_code;
}

}  // namespace cactusdim
