#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgg/point_set.hpp"

namespace rgg::euclid {

/// w(x) <= c max(|x|^p, 1) (W4) or w(x) <= c |x|^p (W6).
struct GrowthBound {
  double c = 1.0;
  double p = 1.0;
};

/// Declared conditions. Empty optionals mean "not claimed".
struct WeightFlags {
  bool w1 = false;  // symmetry
  bool w2 = false;  // w(o) = 0 and w(x) -> 0 as x -> o
  bool w3 = false;  // w(x) -> w_max as |x| -> infinity
  std::optional<GrowthBound> w4;
  std::optional<double> w5;  // c5: w(x) = w_max < inf for |x| > c5
  std::optional<GrowthBound> w6;
  std::optional<double> w7;  // delta: w(x) = 0 for |x| <= delta
};

/// Weight function w: R^d -> [0, inf]. Built-ins depend on |x| only and
/// also expose that radial profile, which truncation uses to place W5.
class WeightFunction {
 public:
  using Eval = std::function<double(std::span<const double>)>;
  using Profile = std::function<double(double)>;

  WeightFunction() = default;
  WeightFunction(std::string spec, Eval eval, double w_max, WeightFlags flags = {});

  double operator()(std::span<const double> x) const { return eval_(x); }
  /// w((b - a) / scale).
  double between(std::span<const double> a, std::span<const double> b, double scale) const;

  const std::string& spec() const { return spec_; }
  double w_max() const { return w_max_; }
  WeightFlags flags;

  /// Radial profile t -> w(t e), when w depends on |x| only.
  const Profile& profile() const { return profile_; }
  /// Smallest t0 known to satisfy w(x) >= a whenever |x| > t0.
  const std::function<std::optional<double>(double)>& reach() const { return reach_; }

  static WeightFunction radial(std::string spec, Profile profile, double w_max, WeightFlags flags,
                               std::function<std::optional<double>(double)> reach = {});

 private:
  std::string spec_;
  Eval eval_;
  double w_max_ = 0.0;
  Profile profile_;
  std::function<std::optional<double>(double)> reach_;
};

// Built-in library; `dim` decides which growth conditions (p < d) apply.
WeightFunction power_weight(double p, int dim);
WeightFunction indicator_weight(int dim);  // 1 - 1_{B_1(o)}
WeightFunction log_weight(int dim);        // log(|x| + 1)
WeightFunction norm_sin_weight(int dim);   // |x| (2 + sin |x|)
WeightFunction power_mix_weight(int dim);  // |x|^{3/2} + |x|^{1/2}

/// w_a = min(w, a).
WeightFunction truncate(const WeightFunction& w, double a);
/// w (1 - 1_{B_delta(o)}).
WeightFunction restrict_away(const WeightFunction& w, double delta, int dim);

/// Spec strings:
///   pow:<p> | indicator | log | normsin | powmix
///   trunc:<inner spec>:<a> | restrict:<inner spec>:<delta>
WeightFunction parse_weight(const std::string& spec, int dim);

struct FlagCheck {
  std::string flag;
  bool pass = true;
  std::vector<double> counterexample;
};

/// Checks every claimed flag on `samples` random points with radii up to
/// 10 max(c5, 1), plus radial probes for the limit conditions W2, W3.
std::vector<FlagCheck> validate_weight(const WeightFunction& w, int dim, std::uint64_t seed = 1,
                                       std::size_t samples = 10000);

/// Weight of pair (i, j) of a point set, cached densely for small inputs.
/// For i < j the value is w((x_j - x_i) / scale). With `side` labels the
/// bipartite weight w* applies: same-side pairs cost w_max.
class EdgeWeights {
 public:
  EdgeWeights(const PointSet& ps, const WeightFunction& w, double scale, std::vector<std::uint8_t> side = {});

  std::size_t size() const { return ps_->size(); }
  double operator()(std::size_t i, std::size_t j) const;

  static constexpr std::size_t kDenseLimit = 2048;

 private:
  const PointSet* ps_;
  const WeightFunction* w_;
  double scale_;
  std::vector<std::uint8_t> side_;
  std::vector<double> dense_;
};

}  // namespace rgg::euclid
