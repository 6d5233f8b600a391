// rgg-limits: command-line front end. Settings come from --config, then
// RGG_* environment variables, then flags (later wins).

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rgg/cli/commands.hpp"
#include "rgg/errors.hpp"

namespace {

struct FlagSet {
  std::map<std::string, std::string> values;
  std::vector<std::string> defines;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    std::string flag = "--" + key;
    for (auto& ch : flag) if (ch == '_') ch = '-';
    app->add_option_function<std::string>(flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

const std::vector<std::string> kKnownKeys = {
    "command", "seed", "workers", "out", "format", "d", "n", "t", "lambda", "s", "dist", "points", "input", "r",
    "functional", "weight", "solver", "node_cap", "mode", "reps", "cluster_cap", "r_exponent", "construction",
    "budget", "property", "trials", "report_dir"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random geometric graph limit experiments"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  FlagSet flags;
  std::string config_path;
  app.add_option("--config", config_path, "experiment file (key = value lines)");
  flags.add(&app, "seed", "master seed");
  flags.add(&app, "workers", "worker threads (0 = hardware concurrency)");
  flags.add(&app, "out", "output directory");
  flags.add(&app, "format", "stdout format: csv or jsonl");
  app.add_option("-D,--define", flags.defines, "extra key=value setting");

  auto* sample = app.add_subcommand("sample", "draw a point sample");
  for (auto k : {"d", "n", "t", "lambda", "s", "dist", "points"}) flags.add(sample, k, k);
  auto* solve = app.add_subcommand("solve", "evaluate a functional on a point CSV");
  for (auto k : {"input", "functional", "r", "weight", "solver", "node_cap"}) flags.add(solve, k, k);
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimates of limits");
  for (auto k : {"mode", "functional", "weight", "d", "lambda", "s", "n", "t", "dist", "reps", "solver", "node_cap",
                 "cluster_cap", "r_exponent", "construction", "budget"})
    flags.add(estimate, k, k);
  auto* proptest = app.add_subcommand("proptest", "randomized property checks");
  for (auto k : {"property", "functional", "trials", "d"}) flags.add(proptest, k, k);
  auto* report = app.add_subcommand("report", "convergence tables from stored records");
  for (auto k : {"input", "report_dir"}) flags.add(report, k, k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : rgg::cli::kExitUsage;
  }

  rgg::cli::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = rgg::cli::ExperimentConfig::load(config_path);
    cfg.apply_env(kKnownKeys);
    if (!app.get_subcommands().empty()) cfg.set("command", app.get_subcommands().front()->get_name());
    for (const auto& [k, v] : flags.values) cfg.set(k, v);
    for (const auto& d : flags.defines) {
      const auto eq = d.find('=');
      if (eq == std::string::npos || eq == 0) throw rgg::ValidationError("--define expects key=value, got '" + d + "'");
      cfg.set(d.substr(0, eq), d.substr(eq + 1));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n' << rgg::cli::usage();
    return rgg::cli::kExitUsage;
  }
  return rgg::cli::run(cfg, std::cout, std::cerr);
}
