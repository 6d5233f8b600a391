#include "rgg/estimators/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rgg/cell_grid.hpp"
#include "rgg/errors.hpp"
#include "rgg/estimators/densities.hpp"
#include "rgg/euclid/functionals.hpp"
#include "rgg/geograph.hpp"
#include "rgg/pointproc.hpp"
#include "rgg/rng.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg::est {

namespace {

// Stream ids below the master seed; distinct from the point-process streams.
constexpr std::uint64_t kBoxStream = 11;
constexpr std::uint64_t kClusterStream = 12;
constexpr std::uint64_t kThermoStream = 13;
constexpr std::uint64_t kDenseStream = 14;

double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

struct RepOutcome {
  double value = 0.0;
  bool exact = true;
  bool failed = false;
};

/// Runs `reps` replications and folds them into a report.
template <class Fn>
void run_reps(EstimatorReport& rep, std::size_t reps, const EstimatorOptions& opt, Fn&& one) {
  if (reps == 0) throw ValidationError("estimator: reps must be positive");
  Stopwatch sw;
  std::vector<RepOutcome> out(reps);
  parallel_for(reps, opt.workers, [&](std::size_t i) { out[i] = one(i); });
  std::vector<double> values;
  values.reserve(reps);
  for (const auto& o : out) {
    if (o.failed) {
      ++rep.failed_reps;
      continue;
    }
    if (!o.exact) ++rep.heuristic_reps;
    values.push_back(o.value);
  }
  const MeanStderr m = summarize(values);
  rep.reps = reps;
  rep.mean = m.mean;
  rep.stderr_ = m.stderr_;
  if (opt.keep_values) rep.values = std::move(values);
  rep.elapsed_ms = sw.elapsed_ms();
}

TargetValue solve_with_fallback(const EstimatorTarget& f, const PointSet& ps, double r, const EstimatorOptions& opt) {
  if (opt.mode == Mode::exact) {
    try {
      return f(ps, r, Mode::exact, opt.limits);
    } catch (const BudgetExceeded&) {
    }
  }
  TargetValue v = f(ps, r, Mode::heuristic, opt.limits);
  v.exact = false;
  return v;
}

}  // namespace

EstimatorTarget EstimatorTarget::graph(const FunctionalDescriptor& f) {
  return EstimatorTarget(f.name, f.dim, [solve = f.solve](const PointSet& ps, double r, Mode mode, const SolverLimits& lim) {
    const SolveResult res = solve(build_graph(ps, r), mode, lim);
    if (mode == Mode::exact && !res.exact) throw BudgetExceeded("exact value unavailable");
    return TargetValue{res.value, res.exact};
  });
}

EstimatorTarget EstimatorTarget::weighted(const std::string& name, const euclid::WeightFunction& w, int dim) {
  Eval eval;
  if (name == "tsp") {
    eval = [w](const PointSet& ps, double r, Mode mode, const SolverLimits&) {
      const auto t = euclid::tsp(ps, w, r, mode);
      return TargetValue{t.weight, t.exact};
    };
  } else if (name == "mm") {
    eval = [w](const PointSet& ps, double r, Mode mode, const SolverLimits&) {
      const auto m = euclid::min_matching(ps, w, r, mode);
      return TargetValue{m.weight, m.exact};
    };
  } else if (name == "mst") {
    eval = [w](const PointSet& ps, double r, Mode, const SolverLimits&) {
      return TargetValue{euclid::mst(ps, w, r).weight, true};
    };
  } else {
    throw ValidationError("unknown weighted functional '" + name + "' (expected tsp, mm or mst)");
  }
  return EstimatorTarget(name, dim, std::move(eval), w.spec());
}

EstimatorReport estimate_rho_box(const EstimatorTarget& f, double lambda, double s, std::size_t reps,
                                 std::uint64_t seed, const EstimatorOptions& opt) {
  if (!(lambda > 0.0) || !(s > 0.0)) throw ValidationError("estimate_rho_box: lambda and s must be positive");
  const int d = f.dim();
  const double volume = std::pow(s, d);
  if (lambda * volume > opt.expected_cap)
    throw ValidationError("estimate_rho_box: expected point count " + std::to_string(lambda * volume) +
                          " exceeds the cap");
  EstimatorReport rep;
  rep.mode = "box";
  rep.functional = f.name();
  rep.weight = f.weight();
  rep.dim = d;
  rep.lambda = lambda;
  rep.s = s;
  rep.r = 1.0;
  rep.seed = seed;
  const CounterRng master(seed, kBoxStream);
  run_reps(rep, reps, opt, [&](std::size_t i) {
    CounterRng rng = master.split(i);
    const PointSet h = sample_homogeneous_box(lambda, s, d, rng);
    const TargetValue v = solve_with_fallback(f, h, 1.0, opt);
    return RepOutcome{v.value / (lambda * volume), v.exact, false};
  });
  return rep;
}

PointSet origin_cluster(double lambda, int dim, CounterRng rng, std::size_t cluster_cap, double initial_side) {
  PointSet window(dim);
  window.push_back(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
  double side = 0.0;
  for (std::uint64_t k = 0;; ++k) {
    const double next = k == 0 ? initial_side : 2.0 * side;
    if (lambda * std::pow(next, dim) > 1e3 * static_cast<double>(cluster_cap))
      throw BudgetExceeded("origin_cluster: window outgrew the cluster cap; lambda may be supercritical");
    // fresh Poisson points of the annulus Q_next \ Q_side
    CounterRng shell_rng = rng.split(k);
    const PointSet shell = sample_homogeneous_box(lambda, next, dim, shell_rng);
    const double inner = side / 2.0;
    for (std::size_t i = 0; i < shell.size(); ++i) {
      auto p = shell[i];
      bool inside = side > 0.0;
      for (int a = 0; a < dim && inside; ++a) inside = p[a] >= -inner && p[a] < inner;
      if (!inside) window.push_back(p);
    }
    side = next;

    const CellGrid grid(window, 1.0);
    std::vector<char> seen(window.size(), 0);
    std::vector<std::size_t> members{0};
    seen[0] = 1;
    std::vector<std::uint32_t> nb;
    bool touches = false;
    for (std::size_t head = 0; head < members.size(); ++head) {
      auto p = window[members[head]];
      for (int a = 0; a < dim; ++a) touches = touches || std::fabs(p[a]) >= side / 2.0 - 1.0;
      grid.within(p, 1.0, nb);
      for (std::uint32_t u : nb) {
        if (seen[u]) continue;
        seen[u] = 1;
        members.push_back(u);
      }
      if (members.size() > cluster_cap)
        throw BudgetExceeded("origin_cluster: cluster exceeds " + std::to_string(cluster_cap) +
                             " points; lambda may be supercritical");
    }
    if (!touches) {
      std::sort(members.begin(), members.end());
      return window.subset(members);
    }
  }
}

EstimatorReport estimate_rho_cluster(const FunctionalDescriptor& f, double lambda, std::size_t reps,
                                     std::uint64_t seed, std::size_t cluster_cap, const EstimatorOptions& opt) {
  if (f.c1 != 0.0) throw ValidationError("estimate_rho_cluster: '" + f.name + "' does not have c1 = 0");
  if (!(lambda > 0.0)) throw ValidationError("estimate_rho_cluster: lambda must be positive");
  EstimatorReport rep;
  rep.mode = "cluster";
  rep.functional = f.name;
  rep.dim = f.dim;
  rep.lambda = lambda;
  rep.r = 1.0;
  rep.seed = seed;
  const EstimatorTarget target = EstimatorTarget::graph(f);
  const CounterRng master(seed, kClusterStream);
  run_reps(rep, reps, opt, [&](std::size_t i) {
    const PointSet c = origin_cluster(lambda, f.dim, master.split(i), cluster_cap);
    const TargetValue v = solve_with_fallback(target, c, 1.0, opt);
    return RepOutcome{v.value / static_cast<double>(c.size()), v.exact, false};
  });
  return rep;
}

namespace {

template <class Scale>
std::vector<EstimatorReport> lln_run(const char* mode, std::uint64_t stream, const EstimatorTarget& f,
                                     const Distribution& mu, const std::vector<std::size_t>& n_grid,
                                     std::size_t reps, std::uint64_t seed, const EstimatorOptions& opt,
                                     const std::function<double(std::size_t)>& radius, Scale&& scale) {
  if (mu.dim() != f.dim()) throw ValidationError(std::string(mode) + ": distribution and functional dimensions differ");
  std::vector<EstimatorReport> out;
  const CounterRng master(seed, stream);
  for (std::size_t n : n_grid) {
    if (n == 0) throw ValidationError(std::string(mode) + ": n must be positive");
    EstimatorReport rep;
    rep.mode = mode;
    rep.functional = f.name();
    rep.weight = f.weight();
    rep.dim = f.dim();
    rep.n = n;
    rep.r = radius(n);
    rep.seed = seed;
    const CounterRng per_n = master.split(n);
    run_reps(rep, reps, opt, [&](std::size_t i) {
      const PointSet x = sample_binomial(mu, n, per_n.split(i).key());
      const TargetValue v = solve_with_fallback(f, x, rep.r, opt);
      return RepOutcome{scale(v.value, n, rep.r), v.exact, false};
    });
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

std::vector<EstimatorReport> lln_thermo_run(const EstimatorTarget& f, const Distribution& mu, double t,
                                            const std::vector<std::size_t>& n_grid, std::size_t reps,
                                            std::uint64_t seed, const EstimatorOptions& opt) {
  if (!(t > 0.0)) throw ValidationError("lln_thermo_run: t must be positive");
  const int d = f.dim();
  auto reports = lln_run(
      "thermo", kThermoStream, f, mu, n_grid, reps, seed, opt,
      [&](std::size_t n) { return std::pow(t / static_cast<double>(n), 1.0 / d); },
      [](double v, std::size_t n, double) { return v / static_cast<double>(n); });
  for (auto& r : reports) r.t = t;
  return reports;
}

double default_dense_radius(std::size_t n, int dim) {
  return std::pow(static_cast<double>(n), -1.0 / (2.0 * dim));
}

std::vector<EstimatorReport> lln_dense_run(const EstimatorTarget& f, const Distribution& mu, const RadiusRule& rule,
                                           const std::vector<std::size_t>& n_grid, std::size_t reps,
                                           std::uint64_t seed, const EstimatorOptions& opt) {
  const int d = f.dim();
  const RadiusRule& rr = rule ? rule : RadiusRule(default_dense_radius);
  return lln_run(
      "dense", kDenseStream, f, mu, n_grid, reps, seed, opt, [&](std::size_t n) { return rr(n, d); },
      [d](double v, std::size_t, double r) { return std::pow(r, d) * v; });
}

SweepResult rho_curve_sweep(const FunctionalDescriptor& f, std::vector<double> lambda_grid, double s,
                            std::size_t reps, std::uint64_t seed, const EstimatorOptions& opt) {
  if (lambda_grid.empty()) throw ValidationError("rho_curve_sweep: empty lambda grid");
  std::sort(lambda_grid.begin(), lambda_grid.end());
  SweepResult res;
  const EstimatorTarget target = EstimatorTarget::graph(f);
  for (double lambda : lambda_grid) {
    SweepRow row;
    row.report = estimate_rho_box(target, lambda, s, reps, seed, opt);
    row.lambda_rho = lambda * row.report.mean;
    row.lambda_rho_stderr = lambda * row.report.stderr_;
    res.rows.push_back(std::move(row));
  }

  auto flag = [&](const std::string& what, double lambda) {
    res.violations.push_back(what + " at lambda=" + std::to_string(lambda));
  };
  if (const auto ref = zeta_bar_reference(f.name, f.dim); ref && ref->kind != ConstantKind::lower_bound) {
    res.zeta_bar = ref->value;
    for (const auto& row : res.rows) {
      if (row.lambda_rho > ref->value + 3.0 * row.lambda_rho_stderr) flag("lambda*rho above zeta_bar", row.report.lambda);
    }
  }
  for (const auto& row : res.rows) {
    if (row.report.mean > f.c1 + f.zeta_singleton + 3.0 * row.report.stderr_) flag("rho above c1+zeta({o})", row.report.lambda);
  }
  for (std::size_t k = 1; k < res.rows.size(); ++k) {
    const auto& a = res.rows[k - 1];
    const auto& b = res.rows[k];
    if (f.p6) {
      const double se = std::hypot(a.lambda_rho_stderr, b.lambda_rho_stderr);
      if (b.lambda_rho < a.lambda_rho - 3.0 * se) flag("lambda*rho decreased", b.report.lambda);
    }
    if (f.p7) {
      const double se = std::hypot(a.report.stderr_, b.report.stderr_);
      if (b.report.mean > a.report.mean + 3.0 * se) flag("rho increased", b.report.lambda);
    }
  }
  const auto& first = res.rows.front();
  const double lambda0 = first.report.lambda;
  if (f.c1 == 0.0 && lambda0 <= 0.05) {
    // first order: rho differs from zeta({o}) only when the origin has a
    // neighbour, which has probability at most lambda * vol(B_1)
    const double tol = 3.0 * first.report.stderr_ + f.K * lambda0 * unit_ball_volume(f.dim);
    if (std::fabs(first.report.mean - f.zeta_singleton) > tol) flag("rho far from zeta({o}) at small lambda", lambda0);
  }
  return res;
}

}  // namespace rgg::est
