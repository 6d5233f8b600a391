#include "rgg/invariants/registry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "rgg/errors.hpp"
#include "rgg/invariants/kappa.hpp"
#include "rgg/invariants/packing.hpp"
#include "rgg/invariants/solvers.hpp"

namespace rgg {

double smoothness_constant(double c1, double c2, double zeta_singleton) {
  return std::max(c1 + zeta_singleton, c2 - zeta_singleton);
}

double FunctionalDescriptor::evaluate(const GeometricGraph& g, const SolverLimits& lim) const {
  const SolveResult r = solve(g, Mode::exact, lim);
  if (!r.exact) throw BudgetExceeded(name + ": exact value unavailable");
  return r.value;
}

double FunctionalDescriptor::evaluate(const PointSet& x, const SolverLimits& lim) const {
  return evaluate(build_graph(x, 1.0), lim);
}

namespace {

SolveResult scalar_result(double v) {
  SolveResult r;
  r.value = r.lower = r.upper = v;
  return r;
}

/// |X|/h - psi_H(X), exact through the packing solver.
GraphSolver psi_prime(const Pattern& h) {
  return [h](const GeometricGraph& g, Mode mode, const SolverLimits& lim) {
    SolveResult p = h_packing_number(g, h, mode, lim);
    const double base = static_cast<double>(g.size()) / static_cast<double>(h.h);
    SolveResult r = scalar_result(base - p.value);
    r.exact = p.exact;
    r.lower = base - p.upper;
    r.upper = base - p.lower;
    return r;
  };
}

FunctionalDescriptor atomic(std::string name, int dim, GraphSolver solve, double c1, double c2, double z1, double p5,
                            bool p6, bool p7) {
  FunctionalDescriptor f;
  f.name = std::move(name);
  f.dim = dim;
  f.solve = std::move(solve);
  f.c1 = c1;
  f.c2 = c2;
  f.zeta_singleton = z1;
  f.K = smoothness_constant(c1, c2, z1);
  f.p5_bound = p5;
  f.p6 = p6;
  f.p7 = p7;
  return f;
}

std::vector<FunctionalDescriptor> build(int dim) {
  std::size_t pow3 = 1;
  for (int k = 0; k < dim; ++k) pow3 *= 3;
  const double kappa = static_cast<double>(kappa_ball_constant(dim));
  std::vector<FunctionalDescriptor> out;

  out.push_back(atomic("alpha", dim, independence_number, 0, 1, 1, 1, true, true));
  out.push_back(atomic("gamma", dim, domination_number, 0, 1 + kappa, 1, 1, false, true));
  out.push_back(atomic("theta", dim, clique_cover_number, 0, 1, 1, 1, true, true));
  out.push_back(atomic(
      "gammainf", dim, [](const GeometricGraph& g, Mode, const SolverLimits& lim) { return eternal_domination_number(g, lim); },
      0, 1 + kappa, 1, 1, true, true));
  out.push_back(atomic(
      "sigma", dim,
      [](const GeometricGraph& g, Mode, const SolverLimits&) { return scalar_result(static_cast<double>(isolated_count(g))); },
      0, 1 + static_cast<double>(pow3), 1, 1, false, true));
  out.push_back(atomic(
      "comps", dim,
      [](const GeometricGraph& g, Mode, const SolverLimits&) { return scalar_result(static_cast<double>(component_count(g))); },
      0, static_cast<double>(pow3), 1, 1, false, true));
  // pieces of the decomposed functionals
  out.push_back(atomic(
      "vc_prime", dim,
      [](const GeometricGraph& g, Mode mode, const SolverLimits& lim) {
        SolveResult v = vertex_cover_number(g, mode, lim);
        const double n = static_cast<double>(g.size());
        SolveResult r = scalar_result(n - v.value);
        r.exact = v.exact;
        r.lower = n - v.upper;
        r.upper = n - v.lower;
        return r;
      },
      0, 1, 1, 1, true, true));
  for (const char* h : {"K2", "K3", "P3"}) {
    const Pattern pat = Pattern::parse(h);
    const double hh = static_cast<double>(pat.h);
    out.push_back(atomic(std::string("psi_prime:") + h, dim, psi_prime(pat), 0, 1, 1.0 / hh, pat.h == 2 ? 0.5 : 1.0,
                         false, true));
  }

  auto decomposed = [&](std::string name, GraphSolver solve, double c3, const std::string& prime,
                        const std::string& second) {
    auto it = std::find_if(out.begin(), out.end(), [&](const FunctionalDescriptor& f) { return f.name == prime; });
    FunctionalDescriptor f = *it;
    f.name = std::move(name);
    f.solve = std::move(solve);
    f.c3 = c3;
    f.prime = prime;
    f.second = second;
    f.p6 = f.p7 = false;
    return f;
  };
  out.push_back(decomposed("vc", vertex_cover_number, 1.0, "vc_prime", ""));
  for (const char* h : {"K2", "K3", "P3"}) {
    const Pattern pat = Pattern::parse(h);
    out.push_back(decomposed(
        std::string("psi:") + h,
        [pat](const GeometricGraph& g, Mode mode, const SolverLimits& lim) { return h_packing_number(g, pat, mode, lim); },
        1.0 / static_cast<double>(pat.h), std::string("psi_prime:") + h, ""));
  }
  // eta = |X|/2 - sigma + (|X|/2 - psi_K2)
  out.push_back(decomposed(
      "eta", [](const GeometricGraph& g, Mode, const SolverLimits&) { return edge_cover_number(g); }, 0.5, "sigma",
      "psi_prime:K2"));
  return out;
}

}  // namespace

const std::vector<FunctionalDescriptor>& registry(int dim) {
  if (dim <= 0) throw ValidationError("registry: dimension must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<FunctionalDescriptor>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, build(dim)).first;
  return it->second;
}

const FunctionalDescriptor& find_functional(const std::string& name, int dim) {
  for (const auto& f : registry(dim)) {
    if (f.name == name) return f;
  }
  throw ValidationError("unknown functional '" + name + "'");
}

}  // namespace rgg
