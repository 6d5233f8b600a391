#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rgg/cli/commands.hpp"
#include "rgg/cli/records.hpp"
#include "rgg/cli/report.hpp"
#include "rgg/errors.hpp"

using namespace rgg;
using namespace rgg::cli;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("rgg-cli-test-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::vector<ResultRecord> load(const std::filesystem::path& p) {
  std::vector<std::string> w;
  auto recs = read_records_file(p.string(), w);
  CHECK(w.empty());
  return recs;
}

json without_timing(json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = without_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timing(v);
  }
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config parsing: sections, comments, errors") {
  const auto c = ExperimentConfig::parse(
      "# experiment\ncommand = estimate\nseed = 9\n\n[estimate]\n; box mode\nlambda = 0.5\nfunctional = sigma  \n");
  CHECK(c.command() == "estimate");
  CHECK(c.get_seed() == 9);
  CHECK(c.get_double("estimate.lambda") == 0.5);
  CHECK(c.get("estimate.functional") == "sigma");
  CHECK(ExperimentConfig{}.get_seed() == 1);
  CHECK_THROWS_AS(ExperimentConfig::parse("a = 1\na = 2\n"), ValidationError);
  CHECK_THROWS_AS(ExperimentConfig::parse("no equals sign\n"), ValidationError);
  CHECK_THROWS_AS(ExperimentConfig::parse("[open\n"), ValidationError);
  CHECK_THROWS_AS(ExperimentConfig::parse("x = abc\n").get_double("x"), ValidationError);
  CHECK_THROWS_AS(ExperimentConfig::parse("x = 1,b\n").get_list("x"), ValidationError);
  CHECK_THROWS_AS(ExperimentConfig{}.get("lambda"), ValidationError);
  CHECK(ExperimentConfig::parse("n = 10, 20 ,40\n").get_list("n") == std::vector<double>{10, 20, 40});

  const auto p = promote_section(c);
  CHECK(p.get("lambda") == "0.5");
  CHECK(env_name("estimate.lambda") == "RGG_ESTIMATE_LAMBDA");
}

TEST_CASE("config id ignores output-only keys and is order free") {
  auto a = ExperimentConfig::parse("command = estimate\nlambda = 1\nseed = 3\n");
  auto b = ExperimentConfig::parse("seed = 3\nlambda = 1\ncommand = estimate\n");
  CHECK(a.id() == b.id());
  CHECK(a.id().size() == 16);
  b.set("out", "/elsewhere");
  b.set("workers", "7");
  b.set("format", "jsonl");
  CHECK(a.id() == b.id());
  b.set("seed", "4");
  CHECK(a.id() != b.id());
  // frozen value guards against accidental changes to the hash input
  CHECK(ExperimentConfig::parse("command = estimate\n").id() == "b852811ea2e6d49f");
}

TEST_CASE("environment overrides file values") {
  auto c = ExperimentConfig::parse("seed = 3\n");
  ::setenv("RGG_SEED", "11", 1);
  ::setenv("RGG_ESTIMATE_REPS", "5", 1);
  c.apply_env({"estimate.reps"});
  ::unsetenv("RGG_SEED");
  ::unsetenv("RGG_ESTIMATE_REPS");
  CHECK(c.get_seed() == 11);
  CHECK(c.get_int("estimate.reps") == 5);
}

TEST_CASE("records round-trip and malformed lines are skipped") {
  auto cfg = ExperimentConfig::parse("command = solve\nr = 0.5\n");
  const auto rec = make_record(cfg, json{{"kind", "solve"}, {"value", 3.0}});
  CHECK(rec.version == std::string(kToolVersion));
  CHECK(record_from_json(to_json(rec)) == rec);

  std::stringstream ss;
  ss << to_json(rec).dump() << "\n{not json\n\n" << json{{"id", "x"}}.dump() << '\n' << to_json(rec).dump() << '\n';
  std::vector<std::string> warnings;
  const auto recs = read_records(ss, warnings);
  CHECK(recs.size() == 2);
  CHECK(warnings.size() == 2);

  est::EstimatorReport r;
  r.mode = "box";
  r.functional = "sigma";
  r.dim = 2;
  r.lambda = 1;
  r.reps = 3;
  r.mean = 0.25;
  r.stderr_ = 0.01;
  r.values = {0.2, 0.25, 0.3};
  const auto back = estimator_report_from_json(to_json(r));
  CHECK(back.mean == r.mean);
  CHECK(back.values == r.values);
  CHECK(csv_row(r).rfind("box,sigma,2,1,0,0,0,3,0.25,0.01,0,0", 0) == 0);
  r.weight = "pow:1";
  CHECK(csv_row(r).rfind("box,sigma[pow:1],", 0) == 0);
}

TEST_CASE("empty config or unknown command is a usage error") {
  std::ostringstream out, err;
  CHECK(run(ExperimentConfig{}, out, err) == kExitUsage);
  CHECK(err.str().find("no command") != std::string::npos);
  CHECK(err.str().find("usage:") != std::string::npos);
  std::ostringstream out2, err2;
  CHECK(run(ExperimentConfig::parse("command = fly\n"), out2, err2) == kExitUsage);
  std::ostringstream out3, err3;
  const auto dir = scratch_dir("usage");
  auto c = ExperimentConfig::parse("command = estimate\nfunctional = sigma\n");
  c.set("out", dir.string());
  CHECK(run(c, out3, err3) == kExitUsage);  // lambda missing
  CHECK(err3.str().find("lambda") != std::string::npos);
}

TEST_CASE("estimate writes a CSV row and a record; re-runs reproduce the payload") {
  const auto dir = scratch_dir("estimate");
  auto c = ExperimentConfig::parse("command = estimate\n[estimate]\nfunctional = sigma\nd = 1\nlambda = 1\ns = 40\nreps = 200\nseed = 5\n");
  c.set("out", dir.string());
  std::ostringstream out, err;
  REQUIRE(run(c, out, err) == kExitOk);
  CHECK(out.str().rfind(std::string(kEstimateCsvHeader) + "\nbox,sigma,1,1,40,0,0,200,", 0) == 0);
  c.set("workers", "3");
  std::ostringstream out2, err2;
  REQUIRE(run(c, out2, err2) == kExitOk);
  const auto recs = load(dir / "records.jsonl");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].id == recs[1].id);
  CHECK(without_timing(recs[0].payload) == without_timing(recs[1].payload));
  const double mean = recs[0].payload["reports"][0]["mean"].get<double>();
  CHECK(mean == doctest::Approx(std::exp(-2.0)).epsilon(0.1));

  std::ifstream summary(dir / "summary.csv");
  std::string header, row1, row2;
  std::getline(summary, header);
  std::getline(summary, row1);
  std::getline(summary, row2);
  CHECK(header == kEstimateCsvHeader);
  CHECK(row1.substr(0, row1.rfind(',')) == row2.substr(0, row2.rfind(',')));
}

TEST_CASE("report groups records into sorted convergence tables") {
  auto mk = [](std::string mode, std::size_t n, double lambda, double mean) {
    est::EstimatorReport r;
    r.mode = std::move(mode);
    r.functional = "mst";
    r.weight = "pow:1";
    r.dim = 2;
    r.n = n;
    r.lambda = lambda;
    r.reps = 4;
    r.mean = mean;
    r.stderr_ = 0.5;
    return to_json(r);
  };
  ExperimentConfig cfg = ExperimentConfig::parse("command = estimate\n");
  std::vector<ResultRecord> recs;
  recs.push_back(make_record(cfg, json{{"kind", "thermo"}, {"reports", {mk("thermo", 400, 0, 2.0), mk("thermo", 100, 0, 1.0)}}}));
  recs.push_back(make_record(cfg, json{{"kind", "box"}, {"reports", {mk("box", 0, 2, 3.0)}}}));
  recs.push_back(make_record(cfg, json{{"kind", "thermo"}, {"reports", {mk("thermo", 200, 0, 1.5)}}}));
  recs.push_back(make_record(cfg, json{{"kind", "proptest"}, {"reports", json::array()}}));
  recs.push_back(make_record(cfg, json{{"kind", "box"}, {"reports", {json{{"mean", 1}}}}}));
  recs.push_back(make_record(cfg, json{{"something", 1}}));
  std::vector<std::string> warnings;
  const auto tables = build_tables(recs, warnings);
  CHECK(warnings.size() == 2);
  REQUIRE(tables.size() == 2);
  CHECK(tables[0].key == "box_mst_pow_1_d2");
  CHECK(tables[0].x_name == "lambda");
  CHECK(tables[1].key == "thermo_mst_pow_1_d2");
  CHECK(dat_text(tables[1]) ==
        "# thermo_mst_pow_1_d2\n# n mean stderr reps\n100 1 0.5 4\n200 1.5 0.5 4\n400 2 0.5 4\n");
  CHECK(gnuplot_text(tables[1]).find("plot 'thermo_mst_pow_1_d2.dat' using 1:2:3") != std::string::npos);

  const auto dir = scratch_dir("report");
  write_tables(tables, dir.string());
  CHECK(std::filesystem::exists(dir / "thermo_mst_pow_1_d2.dat"));
  CHECK(std::filesystem::exists(dir / "box_mst_pow_1_d2.gp"));
}

TEST_CASE("sample, solve, proptest and report commands run end to end") {
  const auto dir = scratch_dir("e2e");
  auto base = [&](const std::string& text) {
    auto c = ExperimentConfig::parse(text);
    c.set("out", dir.string());
    return c;
  };
  std::ostringstream out, err;
  REQUIRE(run(base("command = sample\nd = 2\nn = 25\nseed = 2\n"), out, err) == kExitOk);
  REQUIRE(std::filesystem::exists(dir / "points.csv"));
  std::ostringstream o2, e2;
  auto solve = base("command = solve\nfunctional = alpha\nr = 0.3\n");
  solve.set("input", (dir / "points.csv").string());
  REQUIRE(run(solve, o2, e2) == kExitOk);
  CHECK(o2.str().find("alpha,25,0.3,") != std::string::npos);
  std::ostringstream o3, e3;
  CHECK(run(base("command = proptest\nproperty = P3\nfunctional = sigma\ntrials = 20\nd = 1\n"), o3, e3) == kExitOk);
  CHECK(o3.str().find("P3,sigma,1,20,20,0,0,ok") != std::string::npos);
  std::ostringstream o4, e4;
  CHECK(run(base("command = proptest\nproperty = P99\n"), o4, e4) == kExitUsage);
  std::ostringstream o5, e5;
  REQUIRE(run(base("command = estimate\nmode = density\nconstruction = packing\nd = 1\ns = 10\n"), o5, e5) == kExitOk);
  std::ostringstream o6, e6;
  REQUIRE(run(base("command = report\n"), o6, e6) == kExitOk);
  CHECK(e6.str().empty());
  CHECK(o6.str().find("# density_packing_d1\n# s mean stderr reps\n10 1 0 1\n") != std::string::npos);
}

}  // TEST_SUITE
