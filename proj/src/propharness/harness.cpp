#include "rgg/propharness/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rgg/errors.hpp"
#include "rgg/estimators/report.hpp"
#include "rgg/euclid/functionals.hpp"
#include "rgg/geograph.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/pointproc.hpp"
#include "rgg/rng.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg::prop {

namespace {

constexpr double kTol = 1e-9;
constexpr std::uint64_t kInstanceStream = 31;
constexpr std::uint64_t kTrialStream = 32;
// largest n for the eternal-domination game and the edge-cover DP
constexpr std::size_t kEternalN = 12;
constexpr std::size_t kEdgeCoverN = 16;

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(12);
  o << v;
  return o.str();
}

std::vector<double> random_direction(CounterRng& rng, int d) {
  std::vector<double> u(static_cast<std::size_t>(d));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& c : u) {
      c = rng.uniform(-1.0, 1.0);
      norm += c * c;
    }
  } while (norm > 1.0 || norm < 1e-6);
  for (double& c : u) c /= std::sqrt(norm);
  return u;
}

/// Part labels for X: a hyperplane cut at a random rank, independent
/// coin flips, or k slabs along a random direction.
std::vector<std::size_t> split_labels(const PointSet& x, Split how, std::size_t parts, CounterRng& rng) {
  const std::size_t n = x.size();
  std::vector<std::size_t> label(n, 0);
  if (how == Split::random) {
    for (auto& l : label) l = rng.below(parts);
    return label;
  }
  const auto u = random_direction(rng, x.dim());
  std::vector<double> proj(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < x.dim(); ++k) s += u[k] * x.coord(i, k);
    proj[i] = s;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
  std::vector<std::size_t> cuts;
  for (std::size_t p = 1; p < parts; ++p) cuts.push_back(rng.below(n + 1));
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t rank = 0; rank < n; ++rank) {
    label[order[rank]] = static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), rank) - cuts.begin());
  }
  return label;
}

std::vector<PointSet> parts_of(const PointSet& x, const std::vector<std::size_t>& label, std::size_t parts) {
  std::vector<PointSet> out(parts, PointSet(x.dim()));
  for (std::size_t i = 0; i < x.size(); ++i) out[label[i]].push_back(x[i]);
  return out;
}

/// A point near X (within 1.5 of a random member) or anywhere in its box.
std::vector<double> nearby_point(const PointSet& x, CounterRng& rng) {
  std::vector<double> p(static_cast<std::size_t>(x.dim()));
  if (x.empty()) {
    for (double& c : p) c = rng.uniform(-1.0, 1.0);
    return p;
  }
  const auto base = x[rng.below(x.size())];
  for (int k = 0; k < x.dim(); ++k) p[k] = base[k] + rng.uniform(-1.5, 1.5);
  return p;
}

double eval(const FunctionalDescriptor& f, const PointSet& x) { return f.evaluate(x); }
double eval(const FunctionalDescriptor& f, const GeometricGraph& g) { return f.evaluate(g); }

/// Exact minimum edge cover of the non-isolated vertices by a DP over
/// vertex masks; independent of the matching route.
std::size_t edge_cover_dp(const GeometricGraph& g) {
  const std::size_t n = g.size();
  std::uint32_t need = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) > 0) need |= 1u << v;
  }
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0xff);
  best[0] = 0;
  // best[m]: fewest edges covering exactly-needed mask m (subset of need)
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if ((m & ~need) != 0) continue;
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    std::uint8_t b = 0xff;
    for (std::uint32_t u : g.neighbors(v)) {
      const std::uint32_t rest = m & ~(1u << v) & ~(1u << u);
      if (best[rest] != 0xff) b = std::min<std::uint8_t>(b, static_cast<std::uint8_t>(best[rest] + 1));
    }
    best[m] = b;
  }
  return best[need];
}

using Targets = std::vector<const FunctionalDescriptor*>;

TrialResult check_functional(const std::string& id, const PropertyCase& c, const Targets& targets, const PointSet& x,
                             CounterRng& rng) {
  TrialResult t;
  t.instance = x;
  auto fail = [&](const FunctionalDescriptor& f, const std::string& what) {
    t.outcome = Outcome::fail;
    if (!t.detail.empty()) t.detail += "; ";
    t.detail += f.name + ": " + what;
  };
  for (const FunctionalDescriptor* fp : targets) {
    const FunctionalDescriptor& f = *fp;
    if (id == "P2") {
      std::vector<double> shift(static_cast<std::size_t>(x.dim()));
      for (double& s : shift) s = rng.uniform(-100.0, 100.0);
      const PointSet moved = transform(x, 1.0, shift);
      const double a = eval(f, x), b = eval(f, moved);
      if (a != b) fail(f, "zeta(X) = " + fmt(a) + " but zeta(X + v) = " + fmt(b));
    } else if (id == "P3" || id == "P4") {
      // pair form
      const auto lab = split_labels(x, c.split == Split::slabs ? Split::hyperplane : c.split, 2, rng);
      const auto yz = parts_of(x, lab, 2);
      const double whole = eval(f, x), y = eval(f, yz[0]), z = eval(f, yz[1]);
      if (id == "P3" && whole > y + z + f.c1 + kTol)
        fail(f, "zeta(Y+Z) = " + fmt(whole) + " > " + fmt(y) + " + " + fmt(z) + " + c1");
      if (id == "P4") {
        const double bd = static_cast<double>(boundary_set(yz[0], yz[1], 1.0).size());
        if (whole < y + z - f.c2 * bd - kTol)
          fail(f, "zeta(Y+Z) = " + fmt(whole) + " < " + fmt(y) + " + " + fmt(z) + " - c2 * " + fmt(bd));
      }
      // k-part form over slabs
      const std::size_t k = std::max<std::size_t>(c.parts, 2);
      const auto parts = parts_of(x, split_labels(x, Split::slabs, k, rng), k);
      double sum = 0.0, penalty = 0.0;
      PointSet before(x.dim());
      for (std::size_t i = 0; i < k; ++i) {
        sum += eval(f, parts[i]);
        if (i > 0) penalty += static_cast<double>(boundary_set(parts[i], before, 1.0).size());
        before = before.joined(parts[i]);
      }
      if (id == "P3" && whole > sum + static_cast<double>(k - 1) * f.c1 + kTol)
        fail(f, "k-part: zeta(X) = " + fmt(whole) + " > sum " + fmt(sum) + " + (k-1) c1");
      if (id == "P4" && whole < sum - f.c2 * penalty - kTol)
        fail(f, "k-part: zeta(X) = " + fmt(whole) + " < sum " + fmt(sum) + " - c2 * " + fmt(penalty));
    } else if (id == "P5'") {
      const double v = eval(f, x);
      if (v > f.p5_bound + kTol) fail(f, "zeta on B_1/2 = " + fmt(v) + " > " + fmt(f.p5_bound));
    } else if (id == "P6" || id == "SMOOTH") {
      const auto p = nearby_point(x, rng);
      const PointSet bigger = x.with_point(p);
      if (bigger.has_duplicates()) continue;
      const double a = eval(f, x), b = eval(f, bigger);
      if (id == "P6" && b < a - kTol) fail(f, "adding a point lowered zeta from " + fmt(a) + " to " + fmt(b));
      if (id == "SMOOTH" && std::fabs(b - a) > f.K + kTol)
        fail(f, "adding a point moved zeta by " + fmt(b - a) + ", K = " + fmt(f.K));
    } else if (id == "P7") {
      double r1 = rng.uniform(0.5, 1.5), r2 = rng.uniform(0.5, 1.5);
      if (r1 > r2) std::swap(r1, r2);
      const double a = eval(f, build_graph(x, r1)), b = eval(f, build_graph(x, r2));
      if (b > a + kTol) fail(f, "zeta_r rose from " + fmt(a) + " at r=" + fmt(r1) + " to " + fmt(b) + " at r=" + fmt(r2));
    } else if (id == "P8") {
      // same graph, different points: permute and jiggle within the margin
      // that keeps every pairwise distance on its side of 1
      double margin = 1.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) margin = std::min(margin, std::fabs(std::sqrt(x.squared_distance(i, j)) - 1.0));
      }
      std::vector<std::size_t> perm(x.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      PointSet y(x.dim());
      std::vector<double> p(static_cast<std::size_t>(x.dim()));
      const double step = 0.45 * margin / std::sqrt(static_cast<double>(x.dim()));
      for (std::size_t i : perm) {
        for (int k = 0; k < x.dim(); ++k) p[k] = x.coord(i, k) + rng.uniform(-step, step);
        y.push_back(p);
      }
      if (y.has_duplicates() || build_graph(x, 1.0).edge_count() != build_graph(y, 1.0).edge_count()) {
        t.outcome = Outcome::skip;
        continue;
      }
      const double a = eval(f, x), b = eval(f, y);
      if (std::fabs(a - b) > kTol) fail(f, "isomorphic graphs give " + fmt(a) + " and " + fmt(b));
    }
  }
  return t;
}

TrialResult check_identity(const std::string& id, const PointSet& x, CounterRng& rng, std::uint64_t trial_seed) {
  TrialResult t;
  t.instance = x;
  auto fail = [&](const std::string& what) {
    t.outcome = Outcome::fail;
    t.detail = what;
  };
  const GeometricGraph g = build_graph(x, 1.0);
  if (id == "CHAIN") {
    const double gamma = domination_number(g).value, alpha = independence_number(g).value;
    const SolveResult ginf = eternal_domination_number(g);
    if (!ginf.exact) {
      t.outcome = Outcome::skip;
      return t;
    }
    const double theta = clique_cover_number(g).value;
    if (!(gamma <= alpha && alpha <= ginf.value && ginf.value <= theta))
      fail("gamma, alpha, gammainf, theta = " + fmt(gamma) + ", " + fmt(alpha) + ", " + fmt(ginf.value) + ", " + fmt(theta));
  } else if (id == "EDGECOVER-ID") {
    if (x.size() > kEdgeCoverN) {
      t.outcome = Outcome::skip;
      return t;
    }
    const double eta = static_cast<double>(edge_cover_dp(g));
    const double rhs = static_cast<double>(x.size()) - matching_number(g).value - static_cast<double>(isolated_count(g));
    if (eta != rhs) fail("eta = " + fmt(eta) + " but |X| - psi - sigma = " + fmt(rhs));
    const SolveResult ec = edge_cover_number(g);
    if (ec.value != eta || !is_edge_cover(g, ec.edges)) fail("edge_cover_number disagrees with the DP: " + fmt(ec.value));
  } else if (id == "MULTIGUARD") {
    const SolveResult a = eternal_domination_number(g), b = eternal_domination_multiguard(g);
    if (!a.exact || !b.exact) {
      t.outcome = Outcome::skip;
      return t;
    }
    if (a.value != b.value) fail("one guard per vertex: " + fmt(a.value) + ", several: " + fmt(b.value));
  } else if (id == "MST-COMPONENTS") {
    const double w = euclid::mst(x, euclid::indicator_weight(x.dim()), 1.0).weight;
    const double comps = static_cast<double>(component_count(g));
    if (x.size() > 0 && w != comps - 1.0) fail("MST weight " + fmt(w) + " but components - 1 = " + fmt(comps - 1.0));
  } else if (id == "W-VALIDATE") {
    static const char* specs[] = {"pow:0.5", "pow:1", "pow:2", "indicator", "log", "normsin", "powmix", "trunc:pow:1:2", "restrict:pow:1:0.3"};
    const std::string spec = specs[rng.below(std::size(specs))];
    const auto w = euclid::parse_weight(spec, x.dim());
    for (const auto& chk : euclid::validate_weight(w, x.dim(), trial_seed, 200)) {
      if (!chk.pass) fail(spec + " fails " + chk.flag);
    }
  }
  return t;
}

Targets targets_for(const std::string& id, const FunctionalDescriptor& f) {
  if (!f.decomposed() || id == "P2" || id == "P8") return {&f};
  Targets t{&find_functional(f.prime, f.dim)};
  if (!f.second.empty()) t.push_back(&find_functional(f.second, f.dim));
  return t;
}

bool applicable(const std::string& id, const Targets& targets) {
  for (const auto* f : targets) {
    if (id == "P6" && !f->p6) return false;
    if (id == "P7" && !f->p7) return false;
    if (id == "P8" && !f->p8) return false;
  }
  return true;
}

std::size_t n_cap(const PropertyCase& c, const FunctionalDescriptor& f) {
  if (c.property == "CHAIN" || c.property == "MULTIGUARD" || f.name == "gammainf") return std::min(c.n_max, kEternalN);
  if (c.property == "EDGECOVER-ID") return std::min(c.n_max, kEdgeCoverN);
  return c.n_max;
}

PropertyCase effective(const PropertyCase& c, const FunctionalDescriptor& f) {
  PropertyCase e = c;
  e.n_max = n_cap(c, f);
  e.n_min = std::min(e.n_min, e.n_max);
  return e;
}

}  // namespace

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids{"P2",    "P3",           "P4",         "P5'",           "P6",
                                            "P7",    "P8",           "SMOOTH",     "CHAIN",         "EDGECOVER-ID",
                                            "MULTIGUARD", "MST-COMPONENTS", "W-VALIDATE"};
  return ids;
}

const std::vector<std::string>& functional_properties() {
  static const std::vector<std::string> ids{"P2", "P3", "P4", "P5'", "P6", "P7", "P8", "SMOOTH"};
  return ids;
}

bool is_functional_property(const std::string& id) {
  const auto& f = functional_properties();
  return std::find(f.begin(), f.end(), id) != f.end();
}

PointSet generate_instance(const PropertyCase& c, std::uint64_t seed, std::size_t index) {
  CounterRng rng = CounterRng(seed, kInstanceStream).split(index);
  const int d = c.dim;
  const std::size_t n = c.n_min + rng.below(c.n_max - c.n_min + 1);
  PointSet x(d);
  std::vector<double> p(static_cast<std::size_t>(d));
  if (c.property == "P5'") {
    // uniform in the closed ball B_{1/2}(o)
    while (x.size() < n) {
      double norm = 0.0;
      for (double& v : p) {
        v = rng.uniform(-0.5, 0.5);
        norm += v * v;
      }
      if (norm <= 0.25) x.push_back(p);
    }
    return x;
  }
  const double u = c.intensity_lo * std::pow(c.intensity_hi / c.intensity_lo, rng.uniform01());
  const double side = std::pow(static_cast<double>(std::max<std::size_t>(n, 1)) / u, 1.0 / d);
  const std::uint64_t style = d >= 2 ? rng.below(3) : rng.below(2);
  if (style == 0) {
    while (x.size() < n) {
      for (double& v : p) v = rng.uniform(-side / 2.0, side / 2.0);
      x.push_back(p);
    }
  } else if (style == 1) {
    // blobs: sums of uniforms around a few centres
    const std::size_t k = 1 + rng.below(3);
    std::vector<std::vector<double>> centres(k, std::vector<double>(static_cast<std::size_t>(d)));
    for (auto& ctr : centres) {
      for (double& v : ctr) v = rng.uniform(-side / 2.0, side / 2.0);
    }
    while (x.size() < n) {
      const auto& ctr = centres[rng.below(k)];
      for (int a = 0; a < d; ++a) p[a] = ctr[a] + 0.6 * (rng.uniform01() + rng.uniform01() + rng.uniform01() - 1.5);
      x.push_back(p);
    }
  } else {
    // near a line: long thin clouds make many boundary points
    const auto dir = random_direction(rng, d);
    while (x.size() < n) {
      const double t = rng.uniform(-side, side);
      for (int a = 0; a < d; ++a) p[a] = t * dir[a] + rng.uniform(-0.2, 0.2);
      x.push_back(p);
    }
  }
  return x;
}

TrialResult replay(const PropertyCase& c0, const FunctionalDescriptor& f, std::size_t index) {
  const PropertyCase c = effective(c0, f);
  const PointSet x = generate_instance(c, c.seed, index);
  CounterRng rng = CounterRng(c.seed, kTrialStream).split(index);
  try {
    if (is_functional_property(c.property)) {
      TrialResult t = check_functional(c.property, c, targets_for(c.property, f), x, rng);
      if (c.property == "P2" && index == 0) {
        // identity shift must give equality exactly
        const double a = f.evaluate(x), b = f.evaluate(transform(x, 1.0, std::vector<double>(static_cast<std::size_t>(x.dim()), 0.0)));
        if (a != b) {
          t.outcome = Outcome::fail;
          t.detail += "identity shift changed zeta";
        }
      }
      return t;
    }
    return check_identity(c.property, x, rng, CounterRng(c.seed, kTrialStream).split(index).key());
  } catch (const BudgetExceeded& e) {
    TrialResult t;
    t.outcome = Outcome::skip;
    t.detail = e.what();
    t.instance = x;
    return t;
  }
}

PropertyReport run_property(const PropertyCase& c, const FunctionalDescriptor& f) {
  const auto& ids = property_ids();
  if (std::find(ids.begin(), ids.end(), c.property) == ids.end())
    throw ValidationError("unknown property '" + c.property + "'");
  if (c.n_min > c.n_max || c.n_max == 0) throw ValidationError("run_property: bad n range");
  if (c.dim <= 0) throw ValidationError("run_property: dimension must be positive");
  Stopwatch sw;
  PropertyReport rep;
  rep.property = c.property;
  rep.functional = is_functional_property(c.property) ? f.name : "";
  rep.dim = c.dim;
  rep.trials = c.trials;
  if (is_functional_property(c.property)) {
    const Targets t = targets_for(c.property, f);
    for (const auto* p : t) rep.checked.push_back(p->name);
    if (!applicable(c.property, t)) {
      rep.not_applicable = true;
      rep.elapsed_ms = sw.elapsed_ms();
      return rep;
    }
  }
  std::vector<TrialResult> results(c.trials);
  est::parallel_for(c.trials, c.workers, [&](std::size_t i) { results[i] = replay(c, f, i); });
  for (std::size_t i = 0; i < results.size(); ++i) {
    switch (results[i].outcome) {
      case Outcome::pass: ++rep.passed; break;
      case Outcome::skip: ++rep.skipped; break;
      case Outcome::fail:
        ++rep.violations;
        if (rep.failures.size() < kKeptFailures)
          rep.failures.push_back(Failure{c.seed, i, results[i].detail, to_csv_string(results[i].instance)});
        break;
    }
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

bool SuiteReport::ok() const { return violations() == 0; }

std::size_t SuiteReport::violations() const {
  std::size_t v = 0;
  for (const auto& r : reports) v += r.violations;
  return v;
}

SuiteReport run_all(std::uint64_t seed, const SuiteOptions& opt, const std::vector<FunctionalDescriptor>& functionals) {
  SuiteReport suite;
  auto wanted = [&](const std::string& id) { return opt.only_property.empty() || opt.only_property == id; };
  for (const auto& f : functionals) {
    if (!opt.only_functional.empty() && f.name != opt.only_functional) continue;
    for (const auto& id : functional_properties()) {
      if (!wanted(id)) continue;
      if (f.decomposed() && id != "P2" && id != "P8") continue;
      PropertyCase c;
      c.property = id;
      c.dim = f.dim;
      c.trials = opt.trials;
      c.seed = seed;
      c.workers = opt.workers;
      suite.reports.push_back(run_property(c, f));
    }
  }
  if (!opt.only_functional.empty()) return suite;
  std::vector<int> dims;
  for (const auto& f : functionals) {
    if (std::find(dims.begin(), dims.end(), f.dim) == dims.end()) dims.push_back(f.dim);
  }
  for (int d : dims) {
    for (const auto& id : property_ids()) {
      if (is_functional_property(id) || !wanted(id)) continue;
      PropertyCase c;
      c.property = id;
      c.dim = d;
      c.trials = opt.trials;
      c.seed = seed;
      c.workers = opt.workers;
      suite.reports.push_back(run_property(c, FunctionalDescriptor{}));
    }
  }
  return suite;
}

SuiteReport run_all(std::uint64_t seed, const SuiteOptions& opt) {
  std::vector<FunctionalDescriptor> all;
  for (int d : opt.dims) {
    for (const auto& f : registry(d)) all.push_back(f);
  }
  return run_all(seed, opt, all);
}

}  // namespace rgg::prop
