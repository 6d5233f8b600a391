#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "rgg/errors.hpp"

namespace rgg::euclid {

TreeResult mst(const PointSet& ps, const WeightFunction& w, double scale) {
  const EdgeWeights ew(ps, w, scale);
  const std::size_t n = ps.size();
  TreeResult r;
  if (n <= 1) return r;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best(n, kInf);
  std::vector<std::size_t> link(n, 0);
  std::vector<char> in_tree(n, 0);
  in_tree[0] = 1;
  for (std::size_t j = 1; j < n; ++j) best[j] = ew(0, j);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_tree[j] && (pick == n || best[j] < best[pick])) pick = j;
    }
    in_tree[pick] = 1;
    r.weight += best[pick];
    r.edges.emplace_back(std::min(link[pick], pick), std::max(link[pick], pick));
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double v = ew(pick, j);
      if (v < best[j]) {
        best[j] = v;
        link[j] = pick;
      }
    }
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

std::size_t mst_short_degree_bound(int dim, double delta) {
  if (dim < 1 || dim > 3) throw UnsupportedDimension("mst_short_degree_bound supports d <= 3");
  if (!(delta > 0.0)) throw ValidationError("mst_short_degree_bound: delta must be positive");
  const double side = delta / dim;
  const auto reach = static_cast<long>(std::ceil(1.0 / side)) + 1;
  std::size_t count = 0;
  std::vector<long> m(static_cast<std::size_t>(dim), -reach);
  for (;;) {
    double gap2 = 0.0;
    for (long c : m) {
      const double g = static_cast<double>(std::max(std::labs(c) - 1, 0L)) * side;
      gap2 += g * g;
    }
    if (gap2 <= 1.0) ++count;
    int k = 0;
    while (k < dim && ++m[k] > reach) m[k++] = -reach;
    if (k == dim) break;
  }
  return count + 2;
}

namespace {

double tsp_exact(const PointSet& ps, const WeightFunction& w, double scale) { return tsp(ps, w, scale, Mode::exact).weight; }
double mm_exact(const PointSet& ps, const WeightFunction& w, double scale) {
  return min_matching(ps, w, scale, Mode::exact).weight;
}
double mst_exact(const PointSet& ps, const WeightFunction& w, double scale) { return mst(ps, w, scale).weight; }

}  // namespace

std::vector<WeightedFunctional> weighted_functionals(const WeightFunction& w, int dim) {
  if (!w.flags.w5 || std::fabs(*w.flags.w5 - 1.0) > 1e-12 || !std::isfinite(w.w_max()))
    throw ValidationError("weighted_functionals: constants need W5 with c5 = 1 and finite w_max");
  const double wm = w.w_max();
  std::vector<WeightedFunctional> out{{"tsp", 2 * wm, 2 * wm, &tsp_exact}, {"mm", wm, wm, &mm_exact}};
  if (w.flags.w7) {
    const auto k = static_cast<double>(mst_short_degree_bound(dim, *w.flags.w7));
    out.push_back({"mst", wm, k * wm, &mst_exact});
  }
  return out;
}

}  // namespace rgg::euclid
