#include "rgg/estimators/densities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "rgg/cell_grid.hpp"
#include "rgg/coverage.hpp"
#include "rgg/errors.hpp"
#include "rgg/geograph.hpp"
#include "rgg/invariants/kappa.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/pointproc.hpp"
#include "rgg/rng.hpp"

namespace rgg::est {

const char* to_string(ConstantKind k) {
  switch (k) {
    case ConstantKind::exact_reference: return "exact-reference";
    case ConstantKind::lower_bound: return "lower-bound";
    case ConstantKind::upper_bound: return "upper-bound";
  }
  return "?";
}

std::optional<DensityConstant> density_constant(const std::string& name, int dim) {
  using K = ConstantKind;
  if (name == "alpha_bar") {
    if (dim == 1) return DensityConstant{name, dim, 1.0, K::exact_reference};
    if (dim == 2) return DensityConstant{name, dim, std::sqrt(4.0 / 3.0), K::exact_reference};
    if (dim == 3) return DensityConstant{name, dim, std::sqrt(2.0), K::exact_reference};
  } else if (name == "kappa_bar") {
    if (dim == 1) return DensityConstant{name, dim, 0.5, K::exact_reference};
    if (dim == 2) return DensityConstant{name, dim, std::sqrt(4.0 / 27.0), K::exact_reference};
  } else if (name == "theta_bar") {
    if (dim == 1) return DensityConstant{name, dim, 1.0, K::exact_reference};
    if (dim == 2) return DensityConstant{name, dim, std::sqrt(64.0 / 27.0), K::upper_bound};
  }
  return std::nullopt;
}

std::optional<DensityConstant> zeta_bar_reference(const std::string& functional, int dim) {
  std::optional<DensityConstant> c;
  if (functional == "alpha" || functional == "gamma" || functional == "sigma" || functional == "comps" ||
      functional == "vc_prime") {
    // the supremum over X in Q_s is attained on a packing, where each of
    // these equals |X|
    c = density_constant("alpha_bar", dim);
  } else if (functional == "theta") {
    c = density_constant("theta_bar", dim);
  } else if (functional == "gammainf") {
    c = density_constant("theta_bar", dim);
    if (c) c->kind = ConstantKind::upper_bound;
  }
  if (c) c->name = "zeta_bar";
  return c;
}

namespace {

bool in_half_open_cube(std::span<const double> p, double s) {
  for (double x : p) {
    if (x < -s / 2.0 || x >= s / 2.0) return false;
  }
  return true;
}

double dist_to_closed_cube(std::span<const double> p, double s) {
  double acc = 0.0;
  for (double x : p) {
    const double e = std::max(0.0, std::fabs(x) - s / 2.0);
    acc += e * e;
  }
  return std::sqrt(acc);
}

/// Triangular lattice with the given spacing: rows parallel to the x axis,
/// odd rows shifted by half a spacing. Row 0 passes through (x0, y0).
template <class Keep>
void triangular(double spacing, double x0, double y0, double reach, Keep&& keep) {
  const double h = spacing * std::sqrt(3.0) / 2.0;
  const auto j0 = static_cast<long>(std::floor((-reach - y0) / h)) - 1;
  const auto j1 = static_cast<long>(std::ceil((reach - y0) / h)) + 1;
  for (long j = j0; j <= j1; ++j) {
    const double y = y0 + static_cast<double>(j) * h;
    const double off = x0 + ((j % 2 + 2) % 2 == 1 ? spacing / 2.0 : 0.0);
    const auto k0 = static_cast<long>(std::floor((-reach - off) / spacing)) - 1;
    const auto k1 = static_cast<long>(std::ceil((reach - off) / spacing)) + 1;
    for (long k = k0; k <= k1; ++k) {
      const double p[2] = {off + static_cast<double>(k) * spacing, y};
      keep(std::span<const double>(p, 2));
    }
  }
}

template <class Keep>
void line(double spacing, double x0, double reach, Keep&& keep) {
  const auto k0 = static_cast<long>(std::floor((-reach - x0) / spacing)) - 1;
  const auto k1 = static_cast<long>(std::ceil((reach - x0) / spacing)) + 1;
  for (long k = k0; k <= k1; ++k) {
    const double p[1] = {x0 + static_cast<double>(k) * spacing};
    keep(std::span<const double>(p, 1));
  }
}

void require_dim(int dim, const char* who) {
  if (dim != 1 && dim != 2) throw UnsupportedDimension(std::string(who) + ": only d = 1 and d = 2 are supported");
}

}  // namespace

bool verify_separation(const PointSet& ps, double min_dist) {
  if (ps.size() < 2) return true;
  const CellGrid grid(ps, min_dist);
  std::vector<std::uint32_t> nb;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    grid.within(ps[i], min_dist, nb);
    if (nb.size() != 1) return false;  // only itself
  }
  return true;
}

LatticeResult lattice_packing_density(int dim, double s, double spacing) {
  require_dim(dim, "lattice_packing_density");
  if (!(s > 0.0) || !(spacing > 0.0)) throw ValidationError("lattice_packing_density: s and spacing must be positive");
  LatticeResult res{PointSet(dim), 0.0, false};
  auto keep = [&](std::span<const double> p) {
    if (in_half_open_cube(p, s)) res.points.push_back(p);
  };
  // anchor on the lower corner so the first row and column sit on the boundary
  if (dim == 1) line(spacing, -s / 2.0, s, keep);
  else triangular(spacing, -s / 2.0, -s / 2.0, s, keep);
  res.density = static_cast<double>(res.points.size()) / std::pow(s, dim);
  res.verified = verify_separation(res.points, 1.0);
  return res;
}

LatticeResult lattice_covering_density(int dim, double s, double density_factor) {
  require_dim(dim, "lattice_covering_density");
  if (!(s > 0.0) || !(density_factor > 0.0))
    throw ValidationError("lattice_covering_density: s and density_factor must be positive");
  const double circumradius = 1.0 - kCoveringGuard;
  const double stretch = std::pow(density_factor, -1.0 / dim);
  // spacing whose Voronoi cells have the given circumradius
  const double spacing = stretch * (dim == 1 ? 2.0 * circumradius : std::sqrt(3.0) * circumradius);
  LatticeResult res{PointSet(dim), 0.0, false};
  std::size_t inside = 0;
  auto keep = [&](std::span<const double> p) {
    if (dist_to_closed_cube(p, s) >= 1.0) return;
    res.points.push_back(p);
    if (in_half_open_cube(p, s)) ++inside;
  };
  // half a spacing in from the corner, so Q_s holds whole periods
  if (dim == 1) line(spacing, -s / 2.0 + spacing / 2.0, s / 2.0 + 2.0, keep);
  else triangular(spacing, -s / 2.0 + spacing / 2.0, -s / 2.0 + spacing / 2.0, s / 2.0 + 2.0, keep);
  res.density = static_cast<double>(inside) / std::pow(s, dim);
  const std::vector<double> lo(static_cast<std::size_t>(dim), -s / 2.0), hi(static_cast<std::size_t>(dim), s / 2.0);
  res.verified = verify_box_coverage(res.points, 1.0, lo, hi, kCoveringGuard / 10.0).covered;
  return res;
}

HexagonResult hexagon_partition_density(double s) {
  if (!(s > 0.0)) throw ValidationError("hexagon_partition_density: s must be positive");
  // circumradius 1/2; neighbouring centres sqrt(3)/2 apart
  const double R = 0.5;
  const double spacing = std::sqrt(3.0) * R;
  HexagonResult res;
  std::size_t inside = 0;
  bool ok = true;
  triangular(spacing, 0.0, 0.0, s / 2.0 + 1.0, [&](std::span<const double> c) {
    if (in_half_open_cube(c, s)) ++inside;
    if (dist_to_closed_cube(c, s) >= R) return;  // cannot meet the closed cube
    ++res.cells_meeting;
    // pointy side up relative to the rows of centres
    double v[6][2];
    for (int k = 0; k < 6; ++k) {
      const double a = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
      v[k][0] = c[0] + R * std::cos(a);
      v[k][1] = c[1] + R * std::sin(a);
    }
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        const double dd = std::hypot(v[a][0] - v[b][0], v[a][1] - v[b][1]);
        res.max_diameter = std::max(res.max_diameter, dd);
        if (dd > 1.0 + 1e-12) ok = false;
      }
    }
  });
  res.density = static_cast<double>(inside) / (s * s);
  res.verified = ok;
  return res;
}

double zeta_star_lower(const FunctionalDescriptor& f, double s, std::size_t budget, std::uint64_t seed) {
  if (!f.p6) throw ValidationError("zeta_star_lower: '" + f.name + "' is not flagged P6");
  if (!(s > 0.0)) return 0.0;
  const int d = f.dim;
  PointSet best(d);
  if (d <= 2) {
    best = lattice_packing_density(d, s).points;
  } else {
    const double a = 1.0 + kPackingGuard;
    const auto m = static_cast<std::size_t>(std::ceil(s / a));
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> p(static_cast<std::size_t>(d));
    for (;;) {
      for (int k = 0; k < d; ++k) p[k] = -s / 2.0 + static_cast<double>(idx[k]) * a;
      if (in_half_open_cube(p, s)) best.push_back(p);
      int k = 0;
      while (k < d && ++idx[k] == m) idx[k++] = 0;
      if (k == d) break;
    }
  }
  CounterRng rng(seed, 21);
  std::vector<double> cand(static_cast<std::size_t>(d));
  auto draw = [&] {
    for (int k = 0; k < d; ++k) {
      cand[k] = -s / 2.0 + s * rng.uniform01();
      if (cand[k] >= s / 2.0) cand[k] = -s / 2.0;
    }
  };
  // keep the packing maximal: half the budget goes to separated insertions
  const std::size_t packing_budget = budget / 2;
  for (std::size_t it = 0; it < packing_budget; ++it) {
    draw();
    bool far = true;
    for (std::size_t i = 0; i < best.size() && far; ++i) far = squared_distance(best[i], cand) > 1.0;
    if (far) best.push_back(cand);
  }
  double value = 0.0;
  try {
    value = f.evaluate(best);
  } catch (const BudgetExceeded&) {
    return 0.0;
  }
  for (std::size_t it = packing_budget; it < budget; ++it) {
    draw();
    const PointSet next = best.with_point(cand);
    if (next.has_duplicates()) continue;
    try {
      const double v = f.evaluate(next);
      if (v > value) {
        value = v;
        best = next;
      }
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  return value / std::pow(s, d);
}

CoveringBounds domination_bounds_via_covering(const PointSet& ps, double r, double delta) {
  if (!(r > 0.0)) throw ValidationError("domination_bounds_via_covering: r must be positive");
  if (!(delta > 0.0 && delta < 0.25)) throw ValidationError("domination_bounds_via_covering: delta must lie in (0, 1/4)");
  const int d = ps.dim();
  if (d <= 0) throw ValidationError("domination_bounds_via_covering: point set has no dimension");
  for (double c : ps.coords()) {
    if (c < -0.5 || c >= 0.5) throw ValidationError("domination_bounds_via_covering: points must lie in Q_1");
  }
  CoveringBounds out;
  const double side = 1.0 / r;  // scaled frame: X / r in Q_{1/r}, radius 1
  const PointSet x = scaled(ps, 1.0 / r);
  const auto du = static_cast<std::size_t>(d);

  // L0: covering of Q_{1/r} by balls of radius 1 - 4 delta, projected into the closed cube
  const double rho0 = (1.0 - 4.0 * delta) * (1.0 - kCoveringGuard);
  PointSet net0(d);
  auto keep = [&](std::span<const double> p) {
    if (dist_to_closed_cube(p, side) >= rho0) return;
    std::vector<double> q(p.begin(), p.end());
    for (double& c : q) c = std::clamp(c, -side / 2.0, side / 2.0);
    net0.push_back(q);
  };
  if (d == 1) {
    line(2.0 * rho0, -side / 2.0, side / 2.0 + 2.0, keep);
  } else if (d == 2) {
    triangular(std::sqrt(3.0) * rho0, -side / 2.0, -side / 2.0, side / 2.0 + 2.0, keep);
  } else {
    // cube grid with half-diagonal rho0
    const double a = 2.0 * rho0 / std::sqrt(static_cast<double>(d));
    const auto m = static_cast<std::size_t>(std::ceil(side / a));
    std::vector<std::size_t> idx(du, 0);
    std::vector<double> p(du);
    for (;;) {
      for (std::size_t k = 0; k < du; ++k) p[k] = -side / 2.0 + (static_cast<double>(idx[k]) + 0.5) * a;
      keep(p);
      std::size_t k = 0;
      while (k < du && ++idx[k] == m) idx[k++] = 0;
      if (k == du) break;
    }
  }

  // L: maximal subset of L0 with pairwise distances > 3 delta
  PointSet net(d);
  {
    std::map<std::vector<long>, std::vector<std::size_t>> buckets;
    const double cell = 3.0 * delta;
    std::vector<long> key(du);
    for (std::size_t i = 0; i < net0.size(); ++i) {
      auto p = net0[i];
      for (std::size_t k = 0; k < du; ++k) key[k] = static_cast<long>(std::floor(p[k] / cell));
      bool clash = false;
      std::vector<long> probe(du);
      std::vector<int> off(du, -1);
      for (;;) {
        for (std::size_t k = 0; k < du; ++k) probe[k] = key[k] + off[k];
        if (auto it = buckets.find(probe); it != buckets.end()) {
          for (std::size_t j : it->second) clash = clash || squared_distance(net[j], p) <= cell * cell;
        }
        std::size_t k = 0;
        while (k < du && ++off[k] == 2) off[k++] = -1;
        if (k == du || clash) break;
      }
      if (clash) continue;
      buckets[key].push_back(net.size());
      net.push_back(p);
    }
  }
  out.net_size = net.size();
  {
    const std::vector<double> lo(du, -side / 2.0), hi(du, side / 2.0);
    out.net_verified = d <= 3 && verify_box_coverage(net, 1.0 - delta, lo, hi, delta * 1e-3).covered;
  }

  // explicit dominating set
  const std::size_t k0 = kappa_ball_constant(d);
  const PointSet half_balls = scaled(kappa_construction(d), 0.5);
  const CellGrid grid(x, std::max(delta, 0.5));
  std::vector<std::uint32_t> nb;
  std::vector<std::size_t> chosen;
  auto lex_first = [&](std::span<const double> c, double radius) -> std::optional<std::size_t> {
    grid.within(c, radius, nb);
    if (nb.empty()) return std::nullopt;
    std::size_t bestj = nb[0];
    for (std::uint32_t j : nb) {
      auto a = x[j];
      auto b = x[bestj];
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) bestj = j;
    }
    return bestj;
  };
  std::vector<double> c(du);
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (auto j = lex_first(net[i], delta)) {
      chosen.push_back(*j);
      continue;
    }
    ++out.bad;
    for (std::size_t b = 0; b < half_balls.size(); ++b) {
      for (std::size_t k = 0; k < du; ++k) c[k] = net.coord(i, static_cast<int>(k)) + half_balls.coord(b, static_cast<int>(k));
      if (auto j = lex_first(c, 0.5)) chosen.push_back(*j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  out.dominating_set = std::move(chosen);
  out.upper = static_cast<double>(out.net_size + k0 * out.bad);
  out.dominating_verified = is_dominating(build_graph(x, 1.0), out.dominating_set);
  if (x.empty()) {
    out.degenerate = true;
    out.notice = "empty instance: every net ball is bad and gamma = 0";
  }

  // lower bound from empty cells of side about delta
  const auto kb = density_constant("kappa_bar", d);
  if (!kb) {
    out.notice += (out.notice.empty() ? "" : "; ") + std::string("no kappa_bar reference for this dimension; lower bound omitted");
    return out;
  }
  const auto m = static_cast<std::size_t>(std::ceil(side / delta));
  const double cell = side / static_cast<double>(m);
  if (std::pow(static_cast<double>(m), d) > 1e8) {
    out.notice += (out.notice.empty() ? "" : "; ") + std::string("too many cells; lower bound omitted");
    return out;
  }
  std::vector<char> occupied(static_cast<std::size_t>(std::pow(static_cast<double>(m), d)), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t flat = 0;
    for (int k = 0; k < d; ++k) {
      auto ci = static_cast<std::size_t>(std::clamp(std::floor((x.coord(i, k) + side / 2.0) / cell), 0.0,
                                                    static_cast<double>(m - 1)));
      flat = flat * m + ci;
    }
    occupied[flat] = 1;
  }
  out.empty_cells = static_cast<std::size_t>(std::count(occupied.begin(), occupied.end(), 0));
  out.lower = std::pow(side, d) * std::pow(1.0 + d * delta, -d) * kb->value - static_cast<double>(out.empty_cells);
  if (*out.lower <= 0.0) out.notice += (out.notice.empty() ? "" : "; ") + std::string("lower bound is not positive");
  return out;
}

}  // namespace rgg::est
