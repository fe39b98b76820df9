// Command-line front end: compute, scan, classify, compose, verify-formula.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cactusdim/cactusdim.hpp"

using namespace cactusdim;

namespace {

constexpr int exit_usage = 2;

struct CapFlags {
  std::size_t pair_cap = 2'000'000;
  std::size_t bbr_cap = 1'000'000;
  int time_budget_ms = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pair-cap", pair_cap, "Largest pair universe the exact solver accepts")->capture_default_str();
    cmd->add_option("--bbr-cap", bbr_cap, "Largest number of candidate BBR sets examined")->capture_default_str();
    cmd->add_option("--time-budget-ms", time_budget_ms, "Per-graph time budget, 0 for none")->capture_default_str();
  }

  SolverOptions solver() const {
    SolverOptions s;
    s.pair_cap = pair_cap;
    if (time_budget_ms > 0) s.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(time_budget_ms);
    return s;
  }

  StructuralOptions structural() const {
    StructuralOptions s;
    s.bbr.cap = bbr_cap;
    return s;
  }
};

std::vector<std::string> graph_inputs(const std::string& arg) {
  std::vector<std::string> out;
  if (arg != "-") return {arg};
  for (const auto& line : read_graph6_lines(std::cin)) out.push_back(line.text);
  return out;
}

int run_compute(const std::string& input, const std::string& mode_name, bool breakdown, const CapFlags& caps) {
  DimensionMode mode = parse_mode(mode_name);
  int status = 0;
  for (const auto& text : graph_inputs(input)) {
    try {
      Graph g = parse_graph6(text);
      json j;
      j["graph6"] = encode_graph6(g);
      auto w = exact_dimension(g, mode, caps.solver());
      j["mode"] = to_string(mode);
      j["dimension"] = w.size;
      j["generator"] = w.set;
      if (breakdown) {
        if (is_cactus(g) && cyclomatic_number(g) >= 1) {
          auto d = structural_dimensions(g, caps.structural());
          j["breakdown"] = breakdown_json(d);
        } else {
          j["breakdown"] = nullptr;
          j["breakdown_skipped"] = "structural formula applies to cacti with at least one cycle";
        }
      }
      std::cout << j.dump() << '\n';
    } catch (const std::exception& e) {
      std::cerr << "error: " << text << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

int run_classify(const std::string& text, const CapFlags& caps) {
  Graph g = parse_graph6(text);
  auto r = extremal_classification(g, caps.structural(), caps.solver());
  std::cout << breakdown_record(g, r.breakdown, nullptr, nullptr, extremal_json(r)).dump(2) << '\n';
  return r.findings.empty() ? 0 : 1;
}

int run_compose(const std::string& text, const std::string& mode_name, const CapFlags& caps) {
  Graph g = parse_graph6(text);
  auto cert = compose_generator(g, parse_mode(mode_name), caps.solver());
  json j = certificate_json(cert);
  j["graph6"] = encode_graph6(g);
  std::cout << j.dump(2) << '\n';
  return cert.verified && cert.within_bound() ? 0 : 1;
}

int run_scan_cmd(ScanTask task, const std::string& out_path, const std::string& summary_path) {
  std::ofstream out_file, summary_file;
  if (!out_path.empty() && out_path != "-") {
    out_file.open(out_path);
    if (!out_file) throw std::runtime_error("cannot write " + out_path);
  }
  if (!summary_path.empty()) {
    summary_file.open(summary_path);
    if (!summary_file) throw std::runtime_error("cannot write " + summary_path);
  }
  std::ostream& out = out_file.is_open() ? static_cast<std::ostream&>(out_file) : std::cout;
  std::ostream& summary = summary_file.is_open() ? static_cast<std::ostream&>(summary_file) : std::cerr;
  return scan(task, out, summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimensions of graphs and cacti"};
  app.require_subcommand(1);

  std::string graph_arg, mode_name = "vertex";
  bool breakdown = false;
  CapFlags caps;

  auto* compute = app.add_subcommand("compute", "Exact metric dimension of graph6 input");
  compute->add_option("graph", graph_arg, "graph6 string, or - to read lines from stdin")->required();
  compute->add_option("--mode", mode_name, "vertex, edge or mixed")->check(CLI::IsMember({"vertex", "edge", "mixed"}))->capture_default_str();
  compute->add_flag("--breakdown", breakdown, "Add the structural breakdown for cacti");
  caps.attach(compute);

  std::string source, out_path, summary_path;
  std::vector<std::string> filters, checks;
  int jobs = 1;
  bool mdim = false, timing = false;
  auto* scan_cmd = app.add_subcommand("scan", "Run checks over a corpus and write JSON Lines");
  scan_cmd->add_option("--source", source, "enumerate:N | file:PATH | random:N,M,COUNT,SEED (N, M may be LO-HI)")->required();
  scan_cmd->add_option("--filter", filters, "connected, min-degree-2, min-degree-3, cactus-only, exclude-cycles")
      ->default_val(std::vector<std::string>{"connected"});
  scan_cmd->add_option("--check", checks, "conjecture34, formula, extremal, blocks, delta3 or all")->required();
  scan_cmd->add_option("--out", out_path, "Report path (default stdout)");
  scan_cmd->add_option("--summary", summary_path, "Summary path (default stderr)");
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  scan_cmd->add_flag("--mdim", mdim, "Also compute the mixed dimension");
  scan_cmd->add_flag("--timing", timing, "Record per-graph wall time (reports stop being reproducible)");
  caps.attach(scan_cmd);

  auto* classify = app.add_subcommand("classify", "Extremal classification of one cactus");
  classify->add_option("graph", graph_arg, "graph6 string")->required();
  caps.attach(classify);

  auto* compose = app.add_subcommand("compose", "Block composition certificate");
  compose->add_option("graph", graph_arg, "graph6 string")->required();
  compose->add_option("--mode", mode_name, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}))->capture_default_str();
  caps.attach(compose);

  int max_n = 9;
  auto* verify = app.add_subcommand("verify-formula", "Compare the structural formula with the exact solver on all cacti");
  verify->add_option("--max-n", max_n, "Largest order")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify->add_option("--out", out_path, "Report path (default: no per-graph output)");
  caps.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*compute) return run_compute(graph_arg, mode_name, breakdown, caps);
    if (*classify) return run_classify(graph_arg, caps);
    if (*compose) return run_compose(graph_arg, mode_name, caps);

    ScanTask task;
    task.caps = {caps.pair_cap, caps.bbr_cap, caps.time_budget_ms};
    task.jobs = jobs;
    if (*scan_cmd) {
      task.source = parse_source(source);
      for (const auto& f : filters) task.filters.add(f);
      for (const auto& c : checks)
        for (Check k : parse_checks(c))
          if (std::find(task.checks.begin(), task.checks.end(), k) == task.checks.end()) task.checks.push_back(k);
      task.mdim = mdim;
      task.timing = timing;
      return run_scan_cmd(task, out_path, summary_path);
    }
    // verify-formula
    task.source = parse_source("enumerate:" + std::to_string(max_n));
    task.filters.add("cactus-only");
    task.checks = {Check::formula};
    if (out_path.empty()) {
      auto r = run_scan(task);
      std::cout << r.summary.data.dump(2) << '\n';
      return r.summary.exit_code;
    }
    return run_scan_cmd(task, out_path, "");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const graph6_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_usage;
  } catch (const graph_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
