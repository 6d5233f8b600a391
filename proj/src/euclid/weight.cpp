#include "rgg/euclid/weight.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rgg/errors.hpp"
#include "rgg/rng.hpp"

namespace rgg::euclid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

double parse_number(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("weight spec '" + spec + "': bad number '" + s + "'");
  }
}

/// Bisection for the first t with f(t) >= a, f nondecreasing and unbounded.
double first_reach(const std::function<double(double)>& f, double a) {
  double hi = 1.0;
  while (f(hi) < a) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = (lo + hi) / 2.0;
    (f(mid) >= a ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

WeightFunction::WeightFunction(std::string spec, Eval eval, double w_max, WeightFlags flags)
    : flags(flags), spec_(std::move(spec)), eval_(std::move(eval)), w_max_(w_max) {}

WeightFunction WeightFunction::radial(std::string spec, Profile profile, double w_max, WeightFlags flags,
                                      std::function<std::optional<double>(double)> reach) {
  WeightFunction w(std::move(spec), [profile](std::span<const double> x) { return profile(norm(x)); }, w_max, flags);
  w.profile_ = std::move(profile);
  w.reach_ = std::move(reach);
  return w;
}

double WeightFunction::between(std::span<const double> a, std::span<const double> b, double scale) const {
  double buf[8];
  std::vector<double> heap;
  double* d = buf;
  if (a.size() > 8) {
    heap.resize(a.size());
    d = heap.data();
  }
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = (b[k] - a[k]) / scale;
  return eval_(std::span<const double>(d, a.size()));
}

WeightFunction power_weight(double p, int dim) {
  if (!(p > 0.0)) throw ValidationError("pow weight: exponent must be positive");
  WeightFlags f;
  f.w1 = f.w2 = f.w3 = true;
  if (p < dim) {
    f.w4 = GrowthBound{1.0, p};
    f.w6 = GrowthBound{1.0, p};
  }
  return WeightFunction::radial(
      "pow:" + fmt(p), [p](double t) { return std::pow(t, p); }, kInf, f,
      [p](double a) -> std::optional<double> { return std::pow(std::max(a, 0.0), 1.0 / p); });
}

WeightFunction indicator_weight(int dim) {
  WeightFlags f;
  f.w1 = f.w2 = f.w3 = true;
  f.w4 = GrowthBound{1.0, dim / 2.0};
  f.w5 = 1.0;
  f.w7 = 1.0;
  return WeightFunction::radial(
      "indicator", [](double t) { return t <= 1.0 ? 0.0 : 1.0; }, 1.0, f,
      [](double a) -> std::optional<double> { return a <= 0.0 ? 0.0 : 1.0; });
}

WeightFunction log_weight(int dim) {
  WeightFlags f;
  f.w1 = f.w2 = f.w3 = true;
  // log(t + 1) <= 2 max(t^p, 1) for every p >= 1/2
  f.w4 = GrowthBound{2.0, dim / 2.0};
  return WeightFunction::radial(
      "log", [](double t) { return std::log1p(t); }, kInf, f,
      [](double a) -> std::optional<double> { return std::expm1(std::max(a, 0.0)); });
}

WeightFunction norm_sin_weight(int dim) {
  WeightFlags f;
  f.w1 = f.w2 = f.w3 = true;
  if (dim > 1) f.w4 = GrowthBound{3.0, 1.0};
  // w(t) >= t, so w >= a once t > a
  return WeightFunction::radial(
      "normsin", [](double t) { return t * (2.0 + std::sin(t)); }, kInf, f,
      [](double a) -> std::optional<double> { return std::max(a, 0.0); });
}

WeightFunction power_mix_weight(int dim) {
  WeightFlags f;
  f.w1 = f.w2 = f.w3 = true;
  if (dim > 1) f.w4 = GrowthBound{2.0, 1.5};
  auto prof = [](double t) { return std::pow(t, 1.5) + std::sqrt(t); };
  return WeightFunction::radial("powmix", prof, kInf, f,
                                [prof](double a) -> std::optional<double> { return first_reach(prof, a); });
}

WeightFunction truncate(const WeightFunction& w, double a) {
  if (!(a >= 0.0)) throw ValidationError("truncate: level must be >= 0");
  WeightFlags f;
  f.w1 = w.flags.w1;
  f.w2 = w.flags.w2;
  const double wmax = std::min(w.w_max(), a);
  f.w3 = w.flags.w3;
  if (std::isfinite(wmax)) f.w4 = GrowthBound{std::max(wmax, 1e-300), 0.5};
  if (a < w.w_max() && w.flags.w3 && w.reach()) {
    if (auto t = w.reach()(a)) f.w5 = std::max(*t, 1e-12);
  } else if (w.flags.w5) {
    f.w5 = w.flags.w5;
  }
  if (w.flags.w6) f.w6 = w.flags.w6;
  if (w.flags.w7 && a > 0.0) f.w7 = w.flags.w7;
  const std::string spec = "trunc:" + w.spec() + ":" + fmt(a);
  if (w.profile()) {
    auto inner = w.profile();
    auto inner_reach = w.reach();
    return WeightFunction::radial(
        spec, [inner, a](double t) { return std::min(inner(t), a); }, wmax, f,
        [inner_reach, a](double b) -> std::optional<double> {
          if (b > a) return std::nullopt;
          return inner_reach ? inner_reach(b) : std::nullopt;
        });
  }
  return WeightFunction(spec, [w, a](std::span<const double> x) { return std::min(w(x), a); }, wmax, f);
}

WeightFunction restrict_away(const WeightFunction& w, double delta, int dim) {
  if (!(delta > 0.0)) throw ValidationError("restrict: delta must be positive");
  (void)dim;
  WeightFlags f;
  f.w1 = w.flags.w1;
  f.w2 = true;
  f.w3 = w.flags.w3;
  f.w4 = w.flags.w4;
  f.w7 = delta;
  if (w.flags.w4) {
    const auto g = *w.flags.w4;
    f.w6 = GrowthBound{g.c * std::max(1.0, std::pow(delta, -g.p)), g.p};
  }
  if (w.flags.w5) f.w5 = std::max(*w.flags.w5, delta);
  const std::string spec = "restrict:" + w.spec() + ":" + fmt(delta);
  if (w.profile()) {
    auto inner = w.profile();
    auto inner_reach = w.reach();
    return WeightFunction::radial(
        spec, [inner, delta](double t) { return t <= delta ? 0.0 : inner(t); }, w.w_max(), f,
        [inner_reach, delta](double b) -> std::optional<double> {
          if (!inner_reach) return std::nullopt;
          auto t = inner_reach(b);
          if (!t) return t;
          return b > 0.0 ? std::max(*t, delta) : *t;
        });
  }
  return WeightFunction(
      spec, [w, delta](std::span<const double> x) { return norm(x) <= delta ? 0.0 : w(x); }, w.w_max(), f);
}

WeightFunction parse_weight(const std::string& spec, int dim) {
  if (spec == "indicator") return indicator_weight(dim);
  if (spec == "log") return log_weight(dim);
  if (spec == "normsin") return norm_sin_weight(dim);
  if (spec == "powmix") return power_mix_weight(dim);
  if (spec.rfind("pow:", 0) == 0) return power_weight(parse_number(spec.substr(4), spec), dim);
  for (const char* head : {"trunc:", "restrict:"}) {
    const std::string h = head;
    if (spec.rfind(h, 0) != 0) continue;
    const auto last = spec.rfind(':');
    if (last <= h.size()) throw ValidationError("weight spec '" + spec + "': expected " + h + "<inner>:<value>");
    const WeightFunction inner = parse_weight(spec.substr(h.size(), last - h.size()), dim);
    const double v = parse_number(spec.substr(last + 1), spec);
    return h == "trunc:" ? truncate(inner, v) : restrict_away(inner, v, dim);
  }
  throw ValidationError("unknown weight spec '" + spec + "'");
}

std::vector<FlagCheck> validate_weight(const WeightFunction& w, int dim, std::uint64_t seed, std::size_t samples) {
  CounterRng rng(seed, 0x57);
  const auto& fl = w.flags;
  const double reach = 10.0 * std::max(fl.w5.value_or(1.0), 1.0);
  const std::size_t d = static_cast<std::size_t>(dim);

  auto direction = [&] {
    std::vector<double> u(d);
    double n2 = 0.0;
    while (n2 < 1e-12) {
      n2 = 0.0;
      for (auto& c : u) {
        c = rng.uniform(-1.0, 1.0);
        n2 += c * c;
      }
    }
    for (auto& c : u) c /= std::sqrt(n2);
    return u;
  };
  auto at = [&](const std::vector<double>& u, double t) {
    std::vector<double> x = u;
    for (auto& c : x) c *= t;
    return x;
  };

  std::vector<std::vector<double>> pts;
  pts.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    // half uniform in radius, half log-uniform to probe near the origin
    const double t = i % 2 ? rng.uniform(0.0, reach) : reach * std::pow(10.0, -9.0 * rng.uniform01());
    pts.push_back(at(direction(), t));
  }

  std::vector<FlagCheck> out;
  auto check = [&](const std::string& name, auto&& ok) {
    FlagCheck c{name, true, {}};
    for (const auto& x : pts) {
      if (!ok(x)) {
        c.pass = false;
        c.counterexample = x;
        break;
      }
    }
    out.push_back(std::move(c));
  };
  auto rel_eq = [](double a, double b) { return a == b || std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); };

  if (fl.w1) {
    check("W1", [&](const std::vector<double>& x) {
      std::vector<double> y = x;
      for (auto& c : y) c = -c;
      return rel_eq(w(x), w(y));
    });
  }
  if (fl.w2) {
    FlagCheck c{"W2", true, {}};
    const std::vector<double> o(d, 0.0);
    if (w(o) != 0.0) {
      c.pass = false;
      c.counterexample = o;
    }
    for (int i = 0; i < 100 && c.pass; ++i) {
      const auto u = direction();
      const auto x = at(u, 1e-9);
      if (!(w(x) <= 1e-3)) {
        c.pass = false;
        c.counterexample = x;
      }
    }
    out.push_back(std::move(c));
  }
  if (fl.w3) {
    FlagCheck c{"W3", true, {}};
    for (int i = 0; i < 100 && c.pass; ++i) {
      const auto u = direction();
      if (std::isfinite(w.w_max())) {
        const auto x = at(u, 1e9);
        if (!(std::fabs(w(x) - w.w_max()) <= 1e-3 * std::max(1.0, w.w_max()))) {
          c.pass = false;
          c.counterexample = x;
        }
      } else {
        double prev = -kInf;
        for (double t : {1e2, 1e4, 1e6, 1e8}) {
          const double v = w(at(u, t));
          if (!(v > prev)) {
            c.pass = false;
            c.counterexample = at(u, t);
            break;
          }
          prev = v;
        }
      }
    }
    out.push_back(std::move(c));
  }
  auto growth_ok = [&](const GrowthBound& g) { return g.p > 0.0 && g.p < dim && g.c > 0.0; };
  if (fl.w4) {
    const auto g = *fl.w4;
    if (!growth_ok(g)) {
      out.push_back({"W4", false, {}});
    } else {
      check("W4", [&](const std::vector<double>& x) {
        return w(x) <= g.c * std::max(std::pow(norm(x), g.p), 1.0) * (1 + 1e-12);
      });
    }
  }
  if (fl.w5) {
    const double c5 = *fl.w5;
    if (!std::isfinite(w.w_max())) {
      FlagCheck c{"W5", false, at(direction(), 2.0 * std::max(c5, 1.0))};
      out.push_back(std::move(c));
    } else {
      check("W5", [&](const std::vector<double>& x) { return norm(x) <= c5 || rel_eq(w(x), w.w_max()); });
    }
  }
  if (fl.w6) {
    const auto g = *fl.w6;
    if (!growth_ok(g)) {
      out.push_back({"W6", false, {}});
    } else {
      check("W6", [&](const std::vector<double>& x) { return w(x) <= g.c * std::pow(norm(x), g.p) * (1 + 1e-12); });
    }
  }
  if (fl.w7) {
    const double delta = *fl.w7;
    check("W7", [&](const std::vector<double>& x) { return norm(x) > delta || w(x) == 0.0; });
  }
  return out;
}

EdgeWeights::EdgeWeights(const PointSet& ps, const WeightFunction& w, double scale, std::vector<std::uint8_t> side)
    : ps_(&ps), w_(&w), scale_(scale), side_(std::move(side)) {
  if (!(scale > 0.0)) throw ValidationError("edge weights: scale must be positive");
  const std::size_t n = ps.size();
  if (!side_.empty() && side_.size() != n) throw ValidationError("edge weights: side labels do not match the points");
  if (n <= kDenseLimit) {
    std::vector<double> dense(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = (*this)(i, j);
        if (std::isnan(v) || v < 0.0) throw ValidationError("weight function returned a negative or NaN value");
        dense[i * n + j] = dense[j * n + i] = v;
      }
    }
    dense_ = std::move(dense);
  }
}

double EdgeWeights::operator()(std::size_t i, std::size_t j) const {
  if (!dense_.empty()) return dense_[i * ps_->size() + j];
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  if (!side_.empty() && side_[i] == side_[j]) return w_->w_max();
  return w_->between((*ps_)[i], (*ps_)[j], scale_);
}

}  // namespace rgg::euclid
