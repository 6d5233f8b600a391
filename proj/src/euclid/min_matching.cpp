#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "internal.hpp"
#include "rgg/errors.hpp"

namespace rgg::euclid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMatchingHeuristicCap = 5000;

/// Subset DP matching the lowest unmatched vertex first. Odd n gets a dummy
/// vertex at zero cost, which realizes the single excluded vertex.
MatchResult exact_matching(const EdgeWeights& w) {
  const std::size_t n = w.size();
  const std::size_t m = n + (n % 2);
  const auto cost = [&](std::size_t i, std::size_t j) { return (i >= n || j >= n) ? 0.0 : w(i, j); };
  const std::size_t states = std::size_t{1} << m;
  std::vector<double> dp(states, kInf);
  std::vector<std::uint8_t> low(states, 0), high(states, 0);
  dp[0] = 0.0;
  for (std::size_t s = 0; s + 1 < states; ++s) {
    if (dp[s] == kInf) continue;
    std::size_t i = 0;
    while (s >> i & 1) ++i;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (s >> j & 1) continue;
      const std::size_t t = s | (std::size_t{1} << i) | (std::size_t{1} << j);
      const double v = dp[s] + cost(i, j);
      if (v < dp[t]) {
        dp[t] = v;
        low[t] = static_cast<std::uint8_t>(i);
        high[t] = static_cast<std::uint8_t>(j);
      }
    }
  }
  MatchResult r;
  r.exact = true;
  r.weight = dp[states - 1];
  for (std::size_t s = states - 1; s != 0;) {
    const std::size_t i = low[s], j = high[s];
    if (j < n) r.edges.emplace_back(i, j);
    s &= ~((std::size_t{1} << i) | (std::size_t{1} << j));
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

MatchResult greedy_matching(const EdgeWeights& w) {
  const std::size_t n = w.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return w(a.first, a.second) < w(b.first, b.second); });
  std::vector<char> used(n, 0);
  MatchResult r;
  for (auto [i, j] : pairs) {
    if (used[i] || used[j]) continue;
    used[i] = used[j] = 1;
    r.edges.emplace_back(i, j);
    if (r.edges.size() == n / 2) break;
  }
  // pairwise exchange, plus moves through the excluded vertex when n is odd
  std::size_t spare = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!used[v]) spare = v;
  }
  auto& e = r.edges;
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t x = 0; x < e.size(); ++x) {
      auto [a, b] = e[x];
      const double ab = w(a, b);
      if (spare < n) {
        if (w(spare, b) < ab - 1e-12 * std::max(1.0, ab)) {
          e[x] = {spare, b};
          spare = a;
          improved = true;
          continue;
        }
        if (w(a, spare) < ab - 1e-12 * std::max(1.0, ab)) {
          e[x] = {a, spare};
          spare = b;
          improved = true;
          continue;
        }
      }
      for (std::size_t y = x + 1; y < e.size(); ++y) {
        auto [c, d] = e[y];
        const double cur = ab + w(c, d);
        const double alt1 = w(a, c) + w(b, d);
        const double alt2 = w(a, d) + w(b, c);
        const double tol = 1e-12 * std::max(1.0, cur);
        if (alt1 < cur - tol && alt1 <= alt2) {
          e[x] = {a, c};
          e[y] = {b, d};
          improved = true;
          break;
        }
        if (alt2 < cur - tol) {
          e[x] = {a, d};
          e[y] = {b, c};
          improved = true;
          break;
        }
      }
    }
  }
  for (auto& [a, b] : e) {
    if (a > b) std::swap(a, b);
  }
  std::sort(e.begin(), e.end());
  r.weight = 0.0;
  for (auto [a, b] : e) r.weight += w(a, b);
  return r;
}

}  // namespace

namespace detail {

MatchResult matching_on(const EdgeWeights& w, Mode mode) {
  const std::size_t n = w.size();
  if (n <= 1) {
    MatchResult r;
    r.exact = true;
    return r;
  }
  if (mode == Mode::exact) {
    if (n > kMatchingExactCap)
      throw BudgetExceeded("min_matching: exact mode supports at most " + std::to_string(kMatchingExactCap) +
                           " points; use heuristic mode");
    return exact_matching(w);
  }
  if (n > kMatchingHeuristicCap) throw BudgetExceeded("min_matching: heuristic mode supports at most 5000 points");
  return greedy_matching(w);
}

}  // namespace detail

MatchResult min_matching(const PointSet& ps, const WeightFunction& w, double scale, Mode mode) {
  const EdgeWeights ew(ps, w, scale);
  return detail::matching_on(ew, mode);
}

std::vector<std::size_t> hungarian(const std::vector<double>& cost, std::size_t n) {
  // potentials formulation, 1-based with a virtual column 0
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assign(n);
  for (std::size_t j = 1; j <= n; ++j) assign[p[j] - 1] = j - 1;
  return assign;
}

MatchResult bipartite_matching(const PointSet& u, const PointSet& v, const WeightFunction& w, double scale, Mode mode) {
  if (u.dim() != v.dim() && !u.empty() && !v.empty()) throw ValidationError("bipartite_matching: dimension mismatch");
  const std::size_t nu = u.size(), nv = v.size();
  MatchResult r;
  r.exact = true;
  if (nu == nv) {
    if (nu == 0) return r;
    if (nu > kAssignmentCap) throw BudgetExceeded("bipartite_matching: assignment cap exceeded");
    std::vector<double> cost(nu * nu);
    for (std::size_t i = 0; i < nu; ++i) {
      for (std::size_t j = 0; j < nu; ++j) {
        cost[i * nu + j] = w.between(u[i], v[j], scale);
        if (!std::isfinite(cost[i * nu + j])) throw ValidationError("bipartite_matching: infinite cross weight");
      }
    }
    const auto assign = hungarian(cost, nu);
    for (std::size_t i = 0; i < nu; ++i) {
      r.edges.emplace_back(i, nu + assign[i]);
      r.weight += cost[i * nu + assign[i]];
    }
    return r;
  }
  if (!std::isfinite(w.w_max())) throw ValidationError("bipartite_matching: unbalanced sides need a finite w_max");
  const PointSet all = u.empty() ? v : u.joined(v);
  std::vector<std::uint8_t> side(nu, 0);
  side.resize(nu + nv, 1);
  const EdgeWeights ew(all, w, scale, side);
  return detail::matching_on(ew, mode);
}

}  // namespace rgg::euclid
