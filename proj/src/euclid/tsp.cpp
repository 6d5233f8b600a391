#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "internal.hpp"
#include "rgg/errors.hpp"

namespace rgg::euclid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TourResult held_karp(const EdgeWeights& w) {
  const std::size_t n = w.size();
  const std::size_t m = n - 1;  // vertex 0 is the fixed start
  const std::size_t states = std::size_t{1} << m;
  std::vector<double> dp(states * m, kInf);
  std::vector<std::uint8_t> parent(states * m, 0);
  for (std::size_t j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = w(0, j + 1);
  for (std::size_t s = 1; s < states; ++s) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!(s >> j & 1)) continue;
      const double base = dp[s * m + j];
      if (base == kInf) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (s >> k & 1) continue;
        const std::size_t t = s | (std::size_t{1} << k);
        const double v = base + w(j + 1, k + 1);
        if (v < dp[t * m + k]) {
          dp[t * m + k] = v;
          parent[t * m + k] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }
  const std::size_t full = states - 1;
  TourResult r;
  r.exact = true;
  r.weight = kInf;
  std::size_t last = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double v = dp[full * m + j] + w(j + 1, 0);
    if (v < r.weight) {
      r.weight = v;
      last = j;
    }
  }
  std::vector<std::size_t> rev;
  std::size_t s = full;
  for (std::size_t j = last;;) {
    rev.push_back(j + 1);
    const std::size_t prev = parent[s * m + j];
    s &= ~(std::size_t{1} << j);
    if (s == 0) break;
    j = prev;
  }
  r.order.push_back(0);
  r.order.insert(r.order.end(), rev.rbegin(), rev.rend());
  return r;
}

}  // namespace

double tour_weight(const EdgeWeights& w, const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  if (n <= 1) return 0.0;
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += w(order[i], order[(i + 1) % n]);
  return t;
}

std::vector<std::size_t> nearest_neighbor_tour(const EdgeWeights& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> order;
  if (n == 0) return order;
  std::vector<char> used(n, 0);
  std::size_t cur = 0;
  used[0] = 1;
  order.push_back(0);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t best = n;
    double bw = kInf;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double v = w(cur, j);
      if (best == n || v < bw) {
        bw = v;
        best = j;
      }
    }
    used[best] = 1;
    order.push_back(best);
    cur = best;
  }
  return order;
}

void two_opt(const EdgeWeights& w, std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  if (n < 4) return;
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const std::size_t a = order[i], b = order[i + 1];
      const double ab = w(a, b);
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        const std::size_t c = order[j], d = order[(j + 1) % n];
        const double gain = ab + w(c, d) - w(a, c) - w(b, d);
        if (gain > 1e-12 * std::max(1.0, ab)) {
          std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i + 1), order.begin() + static_cast<std::ptrdiff_t>(j + 1));
          improved = true;
          break;
        }
      }
    }
  }
}

namespace detail {

TourResult tsp_on(const EdgeWeights& w, const PointSet& ps, Mode mode) {
  const std::size_t n = w.size();
  TourResult r;
  r.exact = true;
  for (std::size_t i = 0; i < n; ++i) r.order.push_back(i);
  if (n <= 3) {
    r.weight = tour_weight(w, r.order);
    return r;
  }
  if (mode == Mode::exact) {
    if (n > kTspExactCap)
      throw BudgetExceeded("tsp: exact mode supports at most " + std::to_string(kTspExactCap) + " points; use heuristic mode");
    return held_karp(w);
  }
  r.exact = false;
  std::vector<std::size_t> nn = nearest_neighbor_tour(w);
  two_opt(w, nn);
  r.order = nn;
  r.weight = tour_weight(w, nn);
  if (ps.dim() <= 3) {
    std::vector<std::size_t> curve = hilbert_order(ps);
    two_opt(w, curve);
    const double cw = tour_weight(w, curve);
    if (cw < r.weight) {
      r.weight = cw;
      r.order = std::move(curve);
    }
  }
  return r;
}

}  // namespace detail

TourResult tsp(const PointSet& ps, const WeightFunction& w, double scale, Mode mode) {
  const EdgeWeights ew(ps, w, scale);
  return detail::tsp_on(ew, ps, mode);
}

TourResult bipartite_tsp(const PointSet& u, const PointSet& v, const WeightFunction& w, double scale, Mode mode) {
  if (u.dim() != v.dim() && !u.empty() && !v.empty()) throw ValidationError("bipartite_tsp: dimension mismatch");
  if (!std::isfinite(w.w_max()) && u.size() + v.size() > 2)
    throw ValidationError("bipartite_tsp: w* needs a finite w_max");
  const PointSet all = u.empty() ? v : u.joined(v);
  std::vector<std::uint8_t> side(u.size(), 0);
  side.resize(u.size() + v.size(), 1);
  const EdgeWeights ew(all, w, scale, side);
  return detail::tsp_on(ew, all, mode);
}

}  // namespace rgg::euclid
