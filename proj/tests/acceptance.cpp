// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any line fails.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "cactusdim/cactusdim.hpp"

using namespace cactusdim;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, std::chrono::steady_clock::time_point start) {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << detail << ", " << secs << " s)"
            << std::endl;
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

ScanTask make_task(const std::string& source, std::vector<Check> checks, std::vector<std::string> filters) {
  ScanTask t;
  t.source = parse_source(source);
  for (const auto& f : filters) t.filters.add(f);
  t.checks = std::move(checks);
  t.jobs = jobs();
  return t;
}

struct Tally {
  long pass = 0, fail = 0, skipped = 0;
  void add(Status s) { (s == Status::pass ? pass : s == Status::fail ? fail : skipped) += 1; }
  std::string str() const {
    std::ostringstream o;
    o << pass << " pass, " << fail << " fail, " << skipped << " skipped";
    return o.str();
  }
};

Tally tally(const std::vector<ScanRecord>& records, Check c, int max_n = 1 << 20) {
  Tally t;
  for (const auto& r : records)
    if (r.n <= max_n)
      if (const auto* o = r.outcome(c)) t.add(o->status);
  return t;
}

// multisets of petal lengths from {3,4,5,6} with c petals
void petal_multisets(int c, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == c) {
    out.push_back(cur);
    return;
  }
  for (int len = from; len <= 6; ++len) {
    cur.push_back(len);
    petal_multisets(c, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  // Cacti up to 11 vertices feed criteria 1, 4 and 5.
  auto t0 = clock::now();
  auto cacti = run_scan(make_task("enumerate:11", {Check::formula, Check::extremal}, {"cactus-only"})).records;
  {
    Tally t = tally(cacti, Check::formula);
    long with_cycle = 0;
    for (const auto& r : cacti) with_cycle += r.c >= 1;
    report(1, "structural formulas equal exact dim and edim on all cacti with n <= 11", t.fail == 0 && t.pass == with_cycle,
           t.str(), t0);
  }

  // Graphs with minimum degree 2 up to 8 vertices feed criteria 2, 6 and 7.
  auto t2 = clock::now();
  auto dense = run_scan(make_task("enumerate:8", {Check::conjecture34, Check::blocks, Check::delta3},
                                  {"connected", "min-degree-2", "exclude-cycles"}))
                   .records;
  {
    Tally e = tally(dense, Check::conjecture34);
    // n in 5..12 and m in n+2..min(3n, n(n-1)/2): never a cycle, and dense enough for cheap rejection
    Tally r;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      Rng rng(derive_seed(2026, i));
      int n = rng.uniform(5, 12);
      int m = rng.uniform(n + 2, std::min(3 * n, n * (n - 1) / 2));
      Graph g = random_min_degree_graph(n, m, rng.next());
      auto rec = conjecture_check(g);
      r.add(rec.outcome(Check::conjecture34)->status);
      if (rec.failed()) std::cout << "  counterexample candidate " << rec.graph6 << '\n';
    }
    bool ok = e.fail == 0 && e.skipped == 0 && r.pass == 10000;
    report(2, "dim and edim <= 2c-1 for min degree 2, non-cycle (n <= 8 exhaustive, 10000 random n <= 12)", ok,
           "exhaustive " + e.str() + "; random " + r.str(), t2);
  }

  auto t3 = clock::now();
  {
    long checked = 0, bad = 0;
    for (int c = 2; c <= 4; ++c) {
      std::vector<std::vector<int>> sets;
      std::vector<int> cur;
      petal_multisets(c, 3, cur, sets);
      for (const auto& petals : sets) {
        Graph g = make::daisy(petals);
        int d = exact_dimension(g, DimensionMode::vertex).size;
        int e = exact_dimension(g, DimensionMode::edge).size;
        bool all_even = std::all_of(petals.begin(), petals.end(), [](int x) { return x % 2 == 0; });
        auto x = extremal_classification(g);
        bool ok = (d == 2 * c - 1) == all_even && e == 2 * c - 1 && x.predicted_leafless_dim_equal == all_even &&
                  x.predicted_leafless_edim_equal && x.findings.empty();
        bad += !ok;
        ++checked;
        if (!ok) std::cout << "  daisy " << encode_graph6(g) << " dim " << d << " edim " << e << '\n';
      }
    }
    report(3, "daisies with 2..4 petals of length 3..6: dim = 2c-1 iff no odd petal, edim = 2c-1", bad == 0,
           std::to_string(checked) + " daisies, " + std::to_string(bad) + " bad", t3);
  }

  auto t4 = clock::now();
  {
    Tally t = tally(cacti, Check::extremal, 10);
    report(4, "nearly extremal classification matches exact values on cacti with c >= 2, n <= 10", t.fail == 0 && t.pass > 0,
           t.str(), t4);
  }

  auto t5 = clock::now();
  {
    long leafless = 0, over = 0, eq_outside = 0;
    for (const auto& r : cacti) {
      if (r.extremal.is_null() || !r.extremal["leafless"].get<bool>()) continue;
      ++leafless;
      int d = r.dim->size, e = r.edim->size, top = 2 * r.c - 1;
      over += d > top || e > top;
      bool daisy = r.extremal["is_daisy"].get<bool>(), odd = r.extremal["has_odd_petal"].get<bool>();
      eq_outside += (d == top && !(daisy && !odd)) || (e == top && !daisy);
    }
    report(5, "leafless cacti with c >= 2, n <= 11: dim, edim <= 2c-1, equality only for daisies", leafless > 0 && over == 0 && eq_outside == 0,
           std::to_string(leafless) + " leafless, " + std::to_string(over) + " over, " + std::to_string(eq_outside) +
               " equality outside daisies",
           t5);
  }

  auto t6 = clock::now();
  {
    Tally t = tally(dense, Check::delta3);
    report(6, "min degree 3, n <= 8: n-1 <= 2c-2 and dim, edim < 2c-1", t.fail == 0 && t.pass > 0, t.str(), t6);
  }

  auto t7 = clock::now();
  {
    Tally t = tally(dense, Check::blocks);
    long runs = 0, bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Graph g = random_block_glued_graph(14, derive_seed(7, i));
      bool ok = cyclomatic_additivity_check(g);
      for (auto mode : {DimensionMode::vertex, DimensionMode::edge}) {
        auto cert = compose_generator(g, mode);
        ok = ok && cert.verified && cert.within_bound() && cert.gamma.is_forest() && cert.gamma.leaves_are_blocks() &&
             cert.gamma.selection_ok();
      }
      auto chain = theorem_blocks_check(g);
      ok = ok && chain.chain_dim && chain.chain_edim && chain.strictness_dim && chain.strictness_edim;
      ++runs;
      if (!ok) {
        ++bad;
        std::cout << "  glued graph " << encode_graph6(g) << " failed\n";
      }
    }
    report(7, "cyclomatic additivity, block composition and bound chain", t.fail == 0 && t.skipped == 0 && bad == 0,
           "exhaustive " + t.str() + "; " + std::to_string(runs) + " glued graphs, " + std::to_string(bad) + " bad", t7);
  }

  auto t8 = clock::now();
  {
    long bad_cycles = 0;
    for (int n = 3; n <= 30; ++n) {
      Graph g = make::cycle(n);
      bad_cycles += exact_dimension(g, DimensionMode::vertex).size != 2 || exact_dimension(g, DimensionMode::edge).size != 2;
      auto d = structural_dimensions(g);
      bad_cycles += d.dim_formula != 2 || d.edim_formula != 2;
    }
    long round_trip = 0, bad_trip = 0;
    for (const auto* corpus : {&cacti, &dense})
      for (const auto& r : *corpus) {
        ++round_trip;
        bad_trip += encode_graph6(parse_graph6(r.graph6)) != r.graph6;
      }
    ScanTask t = make_task("enumerate:7", {Check::conjecture34, Check::formula, Check::extremal, Check::blocks, Check::delta3},
                           {"connected"});
    std::ostringstream a, as, b, bs;
    t.jobs = 1;
    scan(t, a, as);
    t.jobs = 4;
    scan(t, b, bs);
    bool same = a.str() == b.str() && as.str() == bs.str();
    report(8, "cycles C3..C30 have dim = edim = 2, graph6 round trip, serial and parallel reports identical",
           bad_cycles == 0 && bad_trip == 0 && same,
           std::to_string(bad_cycles) + " bad cycles, " + std::to_string(round_trip) + " round trips, " +
               std::to_string(bad_trip) + " bad, reports " + (same ? "identical" : "differ"),
           t8);
  }

  return failures == 0 ? 0 : 1;
}
