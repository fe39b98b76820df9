#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cactusdim/harness.hpp"

using namespace cactusdim;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "cactusdim-tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ScanTask task_for(const std::string& source, std::vector<Check> checks, std::vector<std::string> filters = {"connected"}) {
  ScanTask t;
  t.source = parse_source(source);
  for (const auto& f : filters) t.filters.add(f);
  t.checks = std::move(checks);
  return t;
}

int run_cli(const std::string& args) {
  int rc = std::system((std::string(CACTUSDIM_CLI) + " " + args + " >/dev/null 2>&1").c_str());
#ifdef WEXITSTATUS
  return WEXITSTATUS(rc);
#else
  return rc;
#endif
}

}  // namespace

TEST(ParseTest, Sources) {
  auto e = parse_source("enumerate:7");
  EXPECT_EQ(e.kind, ScanSource::Kind::enumerate);
  EXPECT_EQ(e.max_n, 7);
  auto r = parse_source("random:6-9,10-14,50,3");
  EXPECT_EQ(r.kind, ScanSource::Kind::random);
  EXPECT_EQ(r.n_lo, 6);
  EXPECT_EQ(r.n_hi, 9);
  EXPECT_EQ(r.m_hi, 14);
  EXPECT_EQ(r.count, 50);
  EXPECT_EQ(*r.seed, 3u);
  EXPECT_EQ(parse_source("file:x.g6").path, "x.g6");
  for (const char* bad : {"enumerate", "enumerate:x", "enumerate:0", "file:", "random:8,10,5", "random:2,3,1,1", "web:1"})
    EXPECT_THROW(parse_source(bad), usage_error) << bad;
}

TEST(ParseTest, FiltersAndChecks) {
  ScanFilters f;
  EXPECT_FALSE(f.any());
  f.add("delta2");
  EXPECT_EQ(f.min_degree, 2);
  f.add("min-degree-3");
  EXPECT_EQ(f.min_degree, 3);
  EXPECT_THROW(f.add("planar"), usage_error);
  EXPECT_EQ(parse_checks("all").size(), 5u);
  EXPECT_EQ(parse_checks("formula"), std::vector<Check>{Check::formula});
  EXPECT_THROW(parse_checks("everything"), usage_error);
}

TEST(ParseTest, TaskValidation) {
  ScanTask t = task_for("enumerate:4", {Check::blocks}, {});
  EXPECT_THROW(t.validate(), usage_error);
  t.filters.add("connected");
  t.checks.clear();
  EXPECT_THROW(t.validate(), usage_error);
  t.checks = {Check::blocks};
  t.jobs = 0;
  EXPECT_THROW(t.validate(), usage_error);
  t.jobs = 2;
  EXPECT_NO_THROW(t.validate());
}

TEST(ConjectureCheckTest, Examples) {
  auto k23 = conjecture_check(make::complete_bipartite(2, 3));
  EXPECT_EQ(k23.outcome(Check::conjecture34)->status, Status::pass);
  EXPECT_EQ(k23.c, 2);
  EXPECT_EQ(k23.dim->size, 3);  // m + n - 2

  auto daisy = conjecture_check(make::daisy({4, 4}));
  EXPECT_EQ(daisy.outcome(Check::conjecture34)->status, Status::pass);
  EXPECT_EQ(daisy.dim->size, 3);
  EXPECT_EQ(daisy.edim->size, 3);

  auto k4 = conjecture_check(make::complete(4));
  EXPECT_EQ(k4.outcome(Check::conjecture34)->status, Status::pass);
  EXPECT_EQ(k4.kappa, "3+");

  EXPECT_EQ(conjecture_check(make::cycle(5)).outcome(Check::conjecture34)->status, Status::skipped);
  EXPECT_EQ(conjecture_check(make::star(3)).outcome(Check::conjecture34)->status, Status::skipped);
}

TEST(ConjectureCheckTest, CapExceededIsSkipped) {
  CheckOptions opt;
  opt.caps.pair_cap = 5;
  auto r = conjecture_check(make::complete(4), opt);
  EXPECT_EQ(r.outcome(Check::conjecture34)->status, Status::skipped);
  EXPECT_FALSE(r.failed());
}

TEST(FormulaCrosscheckTest, Examples) {
  EXPECT_EQ(formula_crosscheck(make::daisy({3, 4, 5})).outcome(Check::formula)->status, Status::pass);
  EXPECT_EQ(formula_crosscheck(make::complete(4)).outcome(Check::formula)->status, Status::skipped);
}

TEST(RecordTest, KappaClasses) {
  EXPECT_EQ(kappa_class(make::path(3)), "1");
  EXPECT_EQ(kappa_class(make::cycle(5)), "2");
  EXPECT_EQ(kappa_class(make::petersen()), "3+");
}

TEST(ScanTest, EmptyCorpusExitsZero) {
  auto p = scratch("empty.g6");
  write_file(p, "# nothing here\n\n");
  auto r = run_scan(task_for("file:" + p.string(), {Check::conjecture34}));
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.summary.exit_code, 0);
  EXPECT_EQ(r.summary.data["records"], 0);
}

TEST(ScanTest, MalformedLinesAreReported) {
  auto p = scratch("mixed.g6");
  write_file(p, "Bw\nnot graph6\nC~\n");
  auto r = run_scan(task_for("file:" + p.string(), {Check::delta3}));
  EXPECT_EQ(r.records.size(), 2u);
  const auto& bad = r.summary.data["malformed"];
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0]["line"], 2);
  EXPECT_EQ(bad[0]["text"], "not graph6");
}

TEST(ScanTest, SerialAndParallelReportsMatch) {
  auto t = task_for("enumerate:6", {Check::conjecture34, Check::formula, Check::extremal, Check::blocks, Check::delta3});
  std::ostringstream serial_out, serial_sum, par_out, par_sum;
  int a = scan(t, serial_out, serial_sum);
  t.jobs = 4;
  int b = scan(t, par_out, par_sum);
  EXPECT_EQ(a, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(serial_out.str(), par_out.str());
  EXPECT_EQ(serial_sum.str(), par_sum.str());
  EXPECT_FALSE(serial_out.str().empty());
}

TEST(ScanTest, RandomSourceIsReproducible) {
  auto t = task_for("random:6-8,8-12,20,99", {Check::conjecture34}, {"connected", "min-degree-2"});
  std::ostringstream a, b, s;
  scan(t, a, s);
  scan(t, b, s);
  EXPECT_EQ(a.str(), b.str());
  std::string report = a.str();
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 20);
}

TEST(ScanTest, RecordShape) {
  auto r = check_graph(make::daisy({4, 4}), {Check::conjecture34, Check::extremal});
  json j = r.to_json();
  for (const char* key : {"graph6", "n", "m", "c", "delta", "kappa_class", "dim", "edim", "bound", "checks", "extremal", "witnesses"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j.contains("timing_ms"));
  EXPECT_EQ(j["bound"], 3);
  EXPECT_EQ(j["checks"]["conjecture34"]["status"], "PASS");
  EXPECT_EQ(j["extremal"]["is_daisy"], true);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli("compute Bw"), 0);
  EXPECT_EQ(run_cli("compute Bw --mode edge --breakdown"), 0);
  EXPECT_EQ(run_cli("compute Bw --mode sideways"), 2);
  EXPECT_EQ(run_cli("bogus"), 2);
  EXPECT_EQ(run_cli("scan --source enumerate:5 --check all"), 0);
  EXPECT_EQ(run_cli("scan --source enumerate:5 --check nothing"), 2);
  EXPECT_EQ(run_cli("scan --source nowhere --check all"), 2);
  EXPECT_EQ(run_cli("compose Ch"), 2);  // path on 4 vertices
  EXPECT_EQ(run_cli("classify ElaG"), 0);  // square and triangle sharing a vertex
}

TEST(CliTest, ScanWritesReportAndSummary) {
  auto out = scratch("report.jsonl"), sum = scratch("summary.json");
  EXPECT_EQ(run_cli("scan --source enumerate:5 --filter connected --check conjecture34 --out " + out.string() +
                    " --summary " + sum.string()),
            0);
  std::string report = read_file(out);
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 31);  // connected graphs on 1..5 vertices
  json s = json::parse(read_file(sum));
  EXPECT_EQ(s["records"], 31);
  EXPECT_EQ(s["exit_code"], 0);
}
