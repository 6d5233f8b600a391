#include "rgg/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "rgg/errors.hpp"

namespace rgg {

namespace {

constexpr double kMassTolerance = 1e-12;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Distribution Distribution::uniform(int dim) {
  Distribution d = blocked(dim, BlockedDensity{1.0, 1, {1.0}});
  d.uniform_ = true;
  return d;
}

Distribution Distribution::blocked(int dim, BlockedDensity density) {
  return mixture(dim, std::move(density), {});
}

Distribution Distribution::on_segment(std::vector<double> a, std::vector<double> b) {
  const int dim = static_cast<int>(a.size());
  return mixture(dim, std::nullopt, {Segment{std::move(a), std::move(b), 1.0}});
}

Distribution Distribution::mixture(int dim, std::optional<BlockedDensity> ac, std::vector<Segment> singular) {
  if (dim <= 0) throw ValidationError("Distribution: dimension must be positive");
  Distribution d;
  d.dim_ = dim;
  d.ac_ = std::move(ac);
  d.singular_ = std::move(singular);
  if (d.ac_) {
    const double cells = d.ac_->side * d.ac_->cells_per_unit;
    if (d.ac_->cells_per_unit <= 0 || std::fabs(cells - std::round(cells)) > 1e-9 || cells < 1)
      throw ValidationError("Distribution: blocked cube side times cells_per_unit must be a positive integer");
    if (d.ac_->values.size() != ipow(static_cast<std::size_t>(std::lround(cells)), dim))
      throw ValidationError("Distribution: blocked density has wrong number of cells");
  }
  for (const auto& s : d.singular_) {
    if (s.a.size() != static_cast<std::size_t>(dim) || s.b.size() != static_cast<std::size_t>(dim))
      throw ValidationError("Distribution: segment endpoint has wrong dimension");
    if (s.a == s.b) throw ValidationError("Distribution: degenerate segment would be an atom");
  }
  d.validate();

  if (d.ac_) {
    const double cell_volume = std::pow(1.0 / d.ac_->cells_per_unit, dim);
    double acc = 0.0;
    d.cell_cdf_.reserve(d.ac_->values.size());
    for (double v : d.ac_->values) {
      acc += v * cell_volume;
      d.cell_cdf_.push_back(acc);
    }
  }
  double acc = 0.0;
  for (const auto& s : d.singular_) {
    acc += s.mass;
    d.segment_cdf_.push_back(acc);
  }
  return d;
}

int Distribution::grid_per_axis() const {
  return ac_ ? static_cast<int>(std::lround(ac_->side * ac_->cells_per_unit)) : 0;
}

double Distribution::ac_mass() const {
  if (!ac_) return 0.0;
  const double cell_volume = std::pow(1.0 / ac_->cells_per_unit, dim_);
  double m = 0.0;
  for (double v : ac_->values) m += v * cell_volume;
  return m;
}

double Distribution::singular_mass() const {
  double m = 0.0;
  for (const auto& s : singular_) m += s.mass;
  return m;
}

void Distribution::validate() const {
  if (ac_) {
    for (double v : ac_->values) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("Distribution: density values must be finite and >= 0");
    }
  }
  for (const auto& s : singular_) {
    if (!(s.mass >= 0.0)) throw ValidationError("Distribution: segment mass must be >= 0");
  }
  const double total = total_mass();
  if (std::fabs(total - 1.0) > kMassTolerance)
    throw ValidationError("Distribution: total mass must equal 1 (got " + std::to_string(total) + ")");
}

double Distribution::density_at(std::span<const double> x) const {
  if (!ac_) return 0.0;
  const int g = grid_per_axis();
  const double half = ac_->side / 2.0;
  std::size_t flat = 0;
  for (int k = 0; k < dim_; ++k) {
    if (x[k] < -half || x[k] >= half) return 0.0;
    int c = static_cast<int>(std::floor((x[k] + half) * ac_->cells_per_unit));
    c = std::clamp(c, 0, g - 1);
    flat = flat * static_cast<std::size_t>(g) + static_cast<std::size_t>(c);
  }
  return ac_->values[flat];
}

double Distribution::box_mass(std::span<const double> lo, std::span<const double> hi) const {
  double mass = 0.0;
  if (ac_) {
    const int g = grid_per_axis();
    const double h = 1.0 / ac_->cells_per_unit;
    const double half = ac_->side / 2.0;
    // overlap length of cell c on each axis
    std::vector<std::vector<double>> overlap(static_cast<std::size_t>(dim_), std::vector<double>(static_cast<std::size_t>(g)));
    for (int k = 0; k < dim_; ++k) {
      for (int c = 0; c < g; ++c) {
        const double a = -half + c * h;
        const double b = a + h;
        overlap[k][c] = std::max(0.0, std::min(b, hi[k]) - std::max(a, lo[k]));
      }
    }
    const std::size_t total = ac_->values.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
      double vol = 1.0;
      std::size_t rem = flat;
      for (int k = dim_ - 1; k >= 0; --k) {
        vol *= overlap[k][rem % static_cast<std::size_t>(g)];
        rem /= static_cast<std::size_t>(g);
      }
      mass += vol * ac_->values[flat];
    }
  }
  for (const auto& s : singular_) {
    // parameter interval of the segment inside the box
    double t0 = 0.0, t1 = 1.0;
    for (int k = 0; k < dim_ && t0 < t1; ++k) {
      const double da = s.b[k] - s.a[k];
      if (da == 0.0) {
        if (s.a[k] < lo[k] || s.a[k] >= hi[k]) t1 = t0;
        continue;
      }
      double ta = (lo[k] - s.a[k]) / da;
      double tb = (hi[k] - s.a[k]) / da;
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
    }
    if (t1 > t0) mass += s.mass * (t1 - t0);
  }
  return mass;
}

double Distribution::support_volume() const {
  if (!ac_) return 0.0;
  const double cell_volume = std::pow(1.0 / ac_->cells_per_unit, dim_);
  double v = 0.0;
  for (double f : ac_->values) {
    if (f > 0.0) v += cell_volume;
  }
  return v;
}

void Distribution::sample(CounterRng& rng, std::span<double> out) const {
  const double total = total_mass();
  const double u = rng.uniform01() * total;
  const double acm = cell_cdf_.empty() ? 0.0 : cell_cdf_.back();
  if (ac_ && (u < acm || segment_cdf_.empty())) {
    const double target = rng.uniform01() * acm;
    auto it = std::upper_bound(cell_cdf_.begin(), cell_cdf_.end(), target);
    std::size_t flat = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cell_cdf_.begin(), static_cast<std::ptrdiff_t>(cell_cdf_.size()) - 1));
    // skip zero-density cells that upper_bound can land on at the boundary
    while (ac_->values[flat] == 0.0 && flat + 1 < cell_cdf_.size()) ++flat;
    const int g = grid_per_axis();
    const double h = 1.0 / ac_->cells_per_unit;
    const double half = ac_->side / 2.0;
    std::size_t rem = flat;
    for (int k = dim_ - 1; k >= 0; --k) {
      const auto c = static_cast<double>(rem % static_cast<std::size_t>(g));
      rem /= static_cast<std::size_t>(g);
      double x = -half + (c + rng.uniform01()) * h;
      if (x >= -half + (c + 1) * h) x = -half + c * h;  // keep half-open
      out[k] = x;
    }
    return;
  }
  const double target = rng.uniform01() * segment_cdf_.back();
  auto it = std::upper_bound(segment_cdf_.begin(), segment_cdf_.end(), target);
  const auto& s = singular_[static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - segment_cdf_.begin(), static_cast<std::ptrdiff_t>(singular_.size()) - 1))];
  const double t = rng.uniform01();
  for (int k = 0; k < dim_; ++k) out[k] = s.a[k] + t * (s.b[k] - s.a[k]);
}

}  // namespace rgg
