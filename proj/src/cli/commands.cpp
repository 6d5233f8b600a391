#include "rgg/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rgg/cli/records.hpp"
#include "rgg/cli/report.hpp"
#include "rgg/errors.hpp"
#include "rgg/estimators/densities.hpp"
#include "rgg/estimators/estimators.hpp"
#include "rgg/euclid/functionals.hpp"
#include "rgg/geograph.hpp"
#include "rgg/pointproc.hpp"
#include "rgg/propharness/harness.hpp"

namespace rgg::cli {

using nlohmann::json;

namespace {

bool is_weighted(const std::string& name) { return name == "tsp" || name == "mm" || name == "mst"; }

std::string functional_name(const ExperimentConfig& c) {
  std::string f = c.get("functional");
  if (f == "components") f = "comps";
  return f;
}

int dim_of(const ExperimentConfig& c) {
  const auto d = c.get_int("d", 2);
  if (d < 1) throw ValidationError("d must be positive");
  return static_cast<int>(d);
}

std::size_t positive(const ExperimentConfig& c, const std::string& key, std::int64_t fallback) {
  const auto v = c.get_int(key, fallback);
  if (v <= 0) throw ValidationError(key + " must be positive");
  return static_cast<std::size_t>(v);
}

Distribution distribution_of(const ExperimentConfig& c, int dim) {
  const auto name = c.get("dist", "uniform");
  if (name == "uniform") return Distribution::uniform(dim);
  if (name == "segment") {
    std::vector<double> a(static_cast<std::size_t>(dim), 0.0), b(a);
    a[0] = -0.5;
    b[0] = 0.5;
    return Distribution::on_segment(a, b);
  }
  throw ValidationError("unknown dist '" + name + "' (expected uniform or segment)");
}

est::EstimatorTarget target_of(const ExperimentConfig& c, int dim) {
  const auto name = functional_name(c);
  if (is_weighted(name)) return est::EstimatorTarget::weighted(name, euclid::parse_weight(c.get("weight", "pow:1"), dim), dim);
  return est::EstimatorTarget::graph(find_functional(name, dim));
}

est::EstimatorOptions options_of(const ExperimentConfig& c) {
  est::EstimatorOptions o;
  o.workers = static_cast<unsigned>(c.get_int("workers", 0));
  o.mode = parse_mode(c.get("solver", "exact"));
  o.limits.node_cap = static_cast<std::uint64_t>(c.get_int("node_cap", static_cast<std::int64_t>(o.limits.node_cap)));
  o.keep_values = false;
  return o;
}

std::vector<std::size_t> size_list(const ExperimentConfig& c, const std::string& key) {
  std::vector<std::size_t> out;
  for (double v : c.get_list(key)) {
    if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) throw ValidationError(key + " entries must be positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::filesystem::path out_dir(const ExperimentConfig& c) {
  std::filesystem::path p = c.get("out", "rgg-out");
  std::filesystem::create_directories(p);
  return p;
}

void store(const ExperimentConfig& c, const json& payload, std::ostream& out) {
  const auto rec = make_record(c, payload);
  append_record((out_dir(c) / "records.jsonl").string(), rec);
  if (c.get("format", "csv") == "jsonl") out << to_json(rec).dump() << '\n';
}

void write_summary(const ExperimentConfig& c, const std::vector<est::EstimatorReport>& reports, std::ostream& out) {
  const auto path = out_dir(c) / "summary.csv";
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream f(path, std::ios::app);
  if (!f) throw ValidationError("cannot write " + path.string());
  if (fresh) f << kEstimateCsvHeader << '\n';
  const bool csv = c.get("format", "csv") == "csv";
  if (csv) out << kEstimateCsvHeader << '\n';
  for (const auto& r : reports) {
    f << csv_row(r) << '\n';
    if (csv) out << csv_row(r) << '\n';
  }
}

json reports_payload(const std::string& kind, const std::vector<est::EstimatorReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return json{{"kind", kind}, {"reports", arr}};
}

int cmd_sample(const ExperimentConfig& c, std::ostream& out) {
  const int dim = dim_of(c);
  const auto seed = c.get_seed();
  PointSet ps(dim);
  json payload{{"kind", "sample"}};
  if (c.has("lambda")) {
    const double lambda = c.get_double("lambda"), s = c.get_double("s", 10.0);
    ps = sample_homogeneous_box(lambda, s, dim, seed);
    payload["process"] = "poisson_box";
  } else if (c.has("t")) {
    ps = sample_poisson_coupled(distribution_of(c, dim), c.get_double("t"), seed).poisson();
    payload["process"] = "poisson";
  } else {
    ps = sample_binomial(distribution_of(c, dim), positive(c, "n", 100), seed);
    payload["process"] = "binomial";
  }
  const auto path = c.has("points") ? std::filesystem::path(c.get("points")) : out_dir(c) / "points.csv";
  write_csv_file(path.string(), ps);
  payload["n"] = ps.size();
  payload["path"] = path.string();
  store(c, payload, out);
  if (c.get("format", "csv") == "csv") out << "wrote " << ps.size() << " points to " << path.string() << '\n';
  return kExitOk;
}

int cmd_solve(const ExperimentConfig& c, std::ostream& out) {
  const auto ps = read_csv_file(c.get("input"));
  const int dim = ps.dim();
  const double r = c.get_double("r", 1.0);
  const auto mode = parse_mode(c.get("solver", "exact"));
  const auto name = functional_name(c);
  json payload;
  double value = 0.0;
  bool exact = true;
  if (is_weighted(name)) {
    const auto spec = c.get("weight", "pow:1");
    const auto w = euclid::parse_weight(spec, dim);
    if (name == "tsp") {
      const auto t = euclid::tsp(ps, w, r, mode);
      value = t.weight;
      exact = t.exact;
      payload["order"] = t.order;
    } else if (name == "mm") {
      const auto m = euclid::min_matching(ps, w, r, mode);
      value = m.weight;
      exact = m.exact;
      payload["edges"] = m.edges;
    } else {
      const auto m = euclid::mst(ps, w, r);
      value = m.weight;
      exact = m.exact;
      payload["edges"] = m.edges;
    }
    payload["value"] = value;
    payload["exact"] = exact;
    payload["weight"] = spec;
  } else {
    const auto& f = find_functional(name, dim);
    SolverLimits lim;
    lim.node_cap = static_cast<std::uint64_t>(c.get_int("node_cap", static_cast<std::int64_t>(lim.node_cap)));
    const auto res = f.solve(build_graph(ps, r), mode, lim);
    value = res.value;
    exact = res.exact;
    payload = to_json(res);
  }
  payload["kind"] = "solve";
  payload["functional"] = name;
  payload["n"] = ps.size();
  payload["r"] = r;
  store(c, payload, out);
  if (c.get("format", "csv") == "csv") {
    out << "functional,n,r,value,exact\n";
    out << name << ',' << ps.size() << ',' << r << ',' << value << ',' << (exact ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_density(const ExperimentConfig& c, std::ostream& out) {
  const int dim = dim_of(c);
  const double s = c.get_double("s", 20.0);
  const auto what = c.get("construction", "packing");
  est::EstimatorReport r;
  r.mode = "density";
  r.functional = what;
  r.dim = dim;
  r.s = s;
  r.reps = 1;
  r.seed = c.get_seed();
  bool verified = true;
  if (what == "packing") {
    const auto l = est::lattice_packing_density(dim, s);
    r.mean = l.density;
    verified = l.verified;
  } else if (what == "covering") {
    const auto l = est::lattice_covering_density(dim, s);
    r.mean = l.density;
    verified = l.verified;
  } else if (what == "hexagon") {
    if (dim != 2) throw UnsupportedDimension("hexagon partition needs d = 2");
    const auto h = est::hexagon_partition_density(s);
    r.mean = h.density;
    verified = h.verified;
  } else if (what == "zeta_star") {
    const auto name = functional_name(c);
    r.functional = "zeta_star:" + name;
    r.mean = est::zeta_star_lower(find_functional(name, dim), s, positive(c, "budget", 2000), r.seed);
  } else {
    throw ValidationError("unknown construction '" + what + "' (packing, covering, hexagon, zeta_star)");
  }
  auto payload = reports_payload("density", {r});
  payload["verified"] = verified;
  store(c, payload, out);
  write_summary(c, {r}, out);
  return verified ? kExitOk : kExitFailures;
}

int cmd_estimate(const ExperimentConfig& c, std::ostream& out) {
  const auto mode = c.get("mode", "box");
  if (mode == "density") return cmd_density(c, out);
  const int dim = dim_of(c);
  const auto seed = c.get_seed();
  const auto reps = positive(c, "reps", 100);
  const auto opt = options_of(c);
  std::vector<est::EstimatorReport> reports;
  json extra;
  if (mode == "box") {
    reports.push_back(est::estimate_rho_box(target_of(c, dim), c.get_double("lambda"), c.get_double("s", 10.0), reps, seed, opt));
  } else if (mode == "cluster") {
    reports.push_back(est::estimate_rho_cluster(find_functional(functional_name(c), dim), c.get_double("lambda"), reps,
                                                seed, positive(c, "cluster_cap", 100000), opt));
  } else if (mode == "thermo") {
    reports = est::lln_thermo_run(target_of(c, dim), distribution_of(c, dim), c.get_double("t", 1.0), size_list(c, "n"),
                                  reps, seed, opt);
  } else if (mode == "dense") {
    est::RadiusRule rule = est::default_dense_radius;
    if (c.has("r_exponent")) {
      const double e = c.get_double("r_exponent");
      if (e <= 0 || e >= 1.0 / dim) throw ValidationError("r_exponent must lie in (0, 1/d)");
      rule = [e](std::size_t n, int) { return std::pow(static_cast<double>(n), -e); };
    }
    reports = est::lln_dense_run(target_of(c, dim), distribution_of(c, dim), rule, size_list(c, "n"), reps, seed, opt);
  } else if (mode == "sweep") {
    const auto res = est::rho_curve_sweep(find_functional(functional_name(c), dim), c.get_list("lambda"),
                                          c.get_double("s", 10.0), reps, seed, opt);
    for (const auto& row : res.rows) reports.push_back(row.report);
    extra["violations"] = res.violations;
    if (res.zeta_bar) extra["zeta_bar"] = *res.zeta_bar;
  } else {
    throw ValidationError("unknown estimate mode '" + mode + "' (box, cluster, thermo, dense, sweep, density)");
  }
  auto payload = reports_payload(mode, reports);
  for (const auto& [k, v] : extra.items()) payload[k] = v;
  store(c, payload, out);
  write_summary(c, reports, out);
  if (payload.contains("violations") && !payload["violations"].empty()) {
    for (const auto& v : payload["violations"]) out << "violation: " << v.get<std::string>() << '\n';
    return kExitFailures;
  }
  return kExitOk;
}

int cmd_proptest(const ExperimentConfig& c, std::ostream& out) {
  prop::SuiteOptions o;
  o.trials = positive(c, "trials", 200);
  o.workers = static_cast<unsigned>(c.get_int("workers", 0));
  o.only_property = c.get("property", "");
  if (c.has("functional")) o.only_functional = functional_name(c);
  if (!o.only_property.empty()) {
    const auto& ids = prop::property_ids();
    if (std::find(ids.begin(), ids.end(), o.only_property) == ids.end())
      throw ValidationError("unknown property '" + o.only_property + "'");
  }
  if (c.has("d")) o.dims = {dim_of(c)};
  const auto seed = c.get_seed();
  const auto suite = prop::run_all(seed, o);
  if (suite.reports.empty()) throw ValidationError("no property case matches the selection");
  auto payload = to_json(suite);
  payload["kind"] = "proptest";
  store(c, payload, out);
  {
    const auto path = out_dir(c) / "failures.jsonl";
    std::ofstream f(path, std::ios::app);
    for (const auto& r : suite.reports)
      for (const auto& fl : r.failures)
        f << json{{"config_id", c.id()}, {"property", r.property}, {"functional", r.functional}, {"d", r.dim},
                  {"seed", fl.seed}, {"index", fl.index}, {"detail", fl.detail}, {"instance", fl.instance}}
                 .dump()
          << '\n';
  }
  if (c.get("format", "csv") == "csv") {
    out << "property,functional,d,trials,passed,violations,skipped,status\n";
    for (const auto& r : suite.reports) {
      out << r.property << ',' << r.functional << ',' << r.dim << ',' << r.trials << ',' << r.passed << ','
          << r.violations << ',' << r.skipped << ',' << (r.not_applicable ? "n/a" : r.ok() ? "ok" : "FAIL") << '\n';
    }
  }
  return suite.ok() ? kExitOk : kExitFailures;
}

int cmd_report(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const auto input = c.has("input") ? c.get("input") : (std::filesystem::path(c.get("out", "rgg-out")) / "records.jsonl").string();
  std::vector<std::string> warnings;
  const auto records = read_records_file(input, warnings);
  const auto tables = build_tables(records, warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  const auto dir = c.get("report_dir", (std::filesystem::path(c.get("out", "rgg-out")) / "report").string());
  write_tables(tables, dir);
  for (const auto& t : tables) out << dat_text(t);
  out << tables.size() << " table(s) written to " << dir << '\n';
  return kExitOk;
}

}  // namespace

std::string usage() {
  return "usage: rgg-limits <command> [options]\n"
         "commands:\n"
         "  sample    draw a point sample (d, n | t | lambda+s, dist)\n"
         "  solve     evaluate a functional on a CSV point set (input, functional, r)\n"
         "  estimate  Monte Carlo limits (mode box|cluster|thermo|dense|sweep|density)\n"
         "  proptest  randomized property checks (property, functional, trials, d)\n"
         "  report    convergence tables from stored records (input)\n"
         "global: --seed --workers --out --format csv|jsonl --config FILE\n";
}

ExperimentConfig promote_section(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  const auto cmd = cfg.command();
  if (cmd.empty()) return c;
  const auto prefix = cmd + ".";
  for (const auto& [k, v] : cfg.values())
    if (k.rfind(prefix, 0) == 0) c.set_default(k.substr(prefix.size()), v);
  return c;
}

int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto c = promote_section(cfg);
  const auto cmd = c.command();
  try {
    if (cmd.empty()) throw ValidationError("no command given");
    const auto fmt = c.get("format", "csv");
    if (fmt != "csv" && fmt != "jsonl") throw ValidationError("format must be csv or jsonl");
    if (cmd == "sample") return cmd_sample(c, out);
    if (cmd == "solve") return cmd_solve(c, out);
    if (cmd == "estimate") return cmd_estimate(c, out);
    if (cmd == "proptest") return cmd_proptest(c, out);
    if (cmd == "report") return cmd_report(c, out, err);
    throw ValidationError("unknown command '" + cmd + "'");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << usage();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace rgg::cli
