#pragma once

// Exhaustive reference implementations for small instances. Each one works
// from the raw point coordinates and shares no code with the library solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rgg/point_set.hpp"

namespace rgg::oracle {

using Mask = std::uint32_t;

/// Closed-neighbourhood-free adjacency masks of G(X, r), n <= 32.
inline std::vector<Mask> adjacency(const PointSet& ps, double r) {
  const std::size_t n = ps.size();
  std::vector<Mask> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double s = 0;
      for (int k = 0; k < ps.dim(); ++k) {
        const double t = ps.coord(i, k) - ps.coord(j, k);
        s += t * t;
      }
      if (s <= r * r) adj[i] |= Mask{1} << j;
    }
  }
  return adj;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edge_list(const std::vector<Mask>& adj) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = i + 1; j < adj.size(); ++j) {
      if (adj[i] >> j & 1) e.emplace_back(i, j);
    }
  }
  return e;
}

inline bool independent(const std::vector<Mask>& adj, Mask s) {
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if ((s >> i & 1) && (adj[i] & s)) return false;
  }
  return true;
}

inline bool clique(const std::vector<Mask>& adj, Mask s) {
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if ((s >> i & 1) && ((s & ~(Mask{1} << i)) & ~adj[i])) return false;
  }
  return true;
}

inline Mask dominated(const std::vector<Mask>& adj, Mask s) {
  Mask d = s;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (s >> i & 1) d |= adj[i];
  }
  return d;
}

inline Mask full(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int alpha(const std::vector<Mask>& adj) {
  int best = 0;
  for (Mask s = 0; s <= full(adj.size()); ++s) {
    if (independent(adj, s)) best = std::max(best, std::popcount(s));
    if (s == full(adj.size())) break;
  }
  return best;
}

inline int gamma(const std::vector<Mask>& adj) {
  const Mask all = full(adj.size());
  int best = static_cast<int>(adj.size());
  for (Mask s = 0;; ++s) {
    if (dominated(adj, s) == all) best = std::min(best, std::popcount(s));
    if (s == all) break;
  }
  return best;
}

inline int vertex_cover(const std::vector<Mask>& adj) {
  const Mask all = full(adj.size());
  int best = static_cast<int>(adj.size());
  for (Mask s = 0;; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < adj.size() && ok; ++i) {
      if (!(s >> i & 1) && (adj[i] & ~s)) ok = false;
    }
    if (ok) best = std::min(best, std::popcount(s));
    if (s == all) break;
  }
  return best;
}

/// Minimum clique partition by subset dynamic programming, O(3^n).
inline int theta(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  const Mask all = full(n);
  std::vector<int> best(std::size_t{1} << n, 1 << 20);
  std::vector<char> is_clique(std::size_t{1} << n, 0);
  for (Mask s = 0;; ++s) {
    is_clique[s] = clique(adj, s);
    if (s == all) break;
  }
  best[0] = 0;
  for (Mask s = 1;; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    // cliques containing the lowest vertex
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      if (is_clique[sub | low]) best[s] = std::min(best[s], 1 + best[s & ~(sub | low)]);
      if (sub == 0) break;
    }
    if (s == all) break;
  }
  return best[all];
}

/// Maximum matching size by subset recursion.
inline int matching(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> memo(std::size_t{1} << n, -1);
  std::function<int(Mask)> go = [&](Mask s) -> int {
    if (s == 0) return 0;
    if (memo[s] >= 0) return memo[s];
    const int v = std::countr_zero(s);
    const Mask rest = s & ~(Mask{1} << v);
    int best = go(rest);
    Mask cand = adj[v] & rest;
    while (cand) {
      const int u = std::countr_zero(cand);
      cand &= cand - 1;
      best = std::max(best, 1 + go(rest & ~(Mask{1} << u)));
    }
    return memo[s] = best;
  };
  return go(full(n));
}

/// Minimum number of edges covering every non-isolated vertex, found by
/// breadth-first search over covered-vertex masks.
inline int edge_cover(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  Mask target = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i]) target |= Mask{1} << i;
  }
  const auto edges = edge_list(adj);
  std::vector<int> dist(std::size_t{1} << n, -1);
  std::vector<Mask> frontier{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Mask m = frontier[head];
    if ((m & target) == target) return dist[m];
    for (auto [a, b] : edges) {
      const Mask next = m | (Mask{1} << a) | (Mask{1} << b);
      if (dist[next] < 0) {
        dist[next] = dist[m] + 1;
        frontier.push_back(next);
      }
    }
  }
  return -1;
}

/// Eternal domination by direct greatest fixpoint over k-sets (n <= 12).
/// With `multi` guards may share a vertex; configurations are then count vectors.
inline int eternal(const std::vector<Mask>& adj, bool multi = false) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  using Config = std::vector<int>;  // guard count per vertex
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<Config> alive;
    // enumerate configurations of k guards
    Config c(n, 0);
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t v, std::size_t left) {
      if (v == n) {
        if (left == 0) {
          Mask occ = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (c[i]) occ |= Mask{1} << i;
          }
          if (dominated(adj, occ) == full(n)) alive.insert(c);
        }
        return;
      }
      const std::size_t cap = multi ? left : std::min<std::size_t>(left, 1);
      for (std::size_t t = 0; t <= cap; ++t) {
        c[v] = static_cast<int>(t);
        gen(v + 1, left - t);
      }
      c[v] = 0;
    };
    gen(0, k);
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = alive.begin(); it != alive.end();) {
        const Config& cfg = *it;
        bool safe = true;
        for (std::size_t a = 0; a < n && safe; ++a) {
          if (cfg[a]) continue;
          bool answered = false;
          for (std::size_t g = 0; g < n && !answered; ++g) {
            if (!cfg[g] || !(adj[g] >> a & 1)) continue;
            Config next = cfg;
            --next[g];
            ++next[a];
            answered = alive.count(next) > 0;
          }
          safe = answered;
        }
        if (!safe) {
          it = alive.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    if (!alive.empty()) return static_cast<int>(k);
  }
  return static_cast<int>(n);
}

/// Maximum number of vertex-disjoint triangles.
inline int triangle_packing(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::function<int(Mask)> go = [&](Mask s) -> int {
    if (std::popcount(s) < 3) return 0;
    const int v = std::countr_zero(s);
    const Mask rest = s & ~(Mask{1} << v);
    int best = go(rest);
    for (std::size_t a = 0; a < n; ++a) {
      if (!(rest >> a & 1) || !(adj[v] >> a & 1)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!(rest >> b & 1) || !(adj[v] >> b & 1) || !(adj[a] >> b & 1)) continue;
        best = std::max(best, 1 + go(rest & ~(Mask{1} << a) & ~(Mask{1} << b)));
      }
    }
    return best;
  };
  return go(full(n));
}

inline int component_count(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edge_list(adj)) parent[find(a)] = find(b);
  int c = 0;
  for (std::size_t i = 0; i < n; ++i) c += find(i) == i;
  return c;
}

// ---- weighted Euclidean functionals, edge weight supplied as a matrix ----

using Weights = std::vector<std::vector<double>>;

inline double tsp(const Weights& w) {
  const std::size_t n = w.size();
  if (n <= 1) return 0.0;
  if (n == 2) return 2.0 * w[0][1];
  std::vector<std::size_t> perm(n - 1);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  double best = std::numeric_limits<double>::infinity();
  do {
    double t = w[0][perm.front()] + w[perm.back()][0];
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) t += w[perm[i]][perm[i + 1]];
    best = std::min(best, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Minimum near-perfect matching by recursive pairing.
inline double min_matching(const Weights& w) {
  const std::size_t n = w.size();
  std::function<double(std::vector<std::size_t>, bool)> go = [&](std::vector<std::size_t> left, bool may_skip) -> double {
    if (left.size() < 2) return 0.0;
    const std::size_t v = left.front();
    std::vector<std::size_t> rest(left.begin() + 1, left.end());
    double best = std::numeric_limits<double>::infinity();
    if (may_skip) best = go(rest, false);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::vector<std::size_t> next = rest;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      best = std::min(best, w[v][rest[i]] + go(next, may_skip));
    }
    return best;
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return go(all, n % 2 == 1);
}

/// Minimum perfect bipartite matching; w[i][j] for u_i, v_j.
inline double assignment(const Weights& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  do {
    double t = 0;
    for (std::size_t i = 0; i < n; ++i) t += w[i][perm[i]];
    best = std::min(best, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Minimum spanning tree by enumerating every labelled tree (Pruefer codes).
inline double mst(const Weights& w) {
  const std::size_t n = w.size();
  if (n <= 1) return 0.0;
  if (n == 2) return w[0][1];
  std::vector<std::size_t> code(n - 2, 0);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code) ++degree[c];
    double t = 0;
    for (std::size_t c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      t += w[leaf][c];
      --degree[leaf];
      --degree[c];
    }
    std::size_t a = n, b = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (degree[i] == 1) (a == n ? a : b) = i;
    }
    t += w[a][b];
    best = std::min(best, t);
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return best;
}

/// Minimum spanning tree over every rooted tree shape, by subset recursion:
/// best(v, S) is the cheapest tree on S + {v} rooted at v. O(n^2 3^n); the
/// Pruefer enumeration above is exponential in n log n and stops near n = 9.
inline double mst_subsets(const Weights& w) {
  const std::size_t n = w.size();
  if (n <= 1) return 0.0;
  const std::size_t full_set = (std::size_t{1} << n) - 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(n << n, inf);
  auto at = [&](std::size_t v, std::size_t s) -> double& { return best[(v << n) | s]; };
  for (std::size_t s = 0; s <= full_set; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      if (s == 0) {
        at(v, s) = 0.0;
        continue;
      }
      const std::size_t low = s & (~s + 1);
      double b = inf;
      // a = the subtree hanging off v that contains the lowest vertex of s
      for (std::size_t a = s; a; a = (a - 1) & s) {
        if (!(a & low)) continue;
        const double rest = at(v, s & ~a);
        for (std::size_t u = 0; u < n; ++u) {
          if (a >> u & 1) b = std::min(b, w[v][u] + at(u, a & ~(std::size_t{1} << u)) + rest);
        }
      }
      at(v, s) = b;
    }
  }
  return at(0, full_set & ~std::size_t{1});
}

}  // namespace rgg::oracle
