#include <algorithm>

#include "rgg/invariants/solvers.hpp"

namespace rgg {

namespace {

bool valid_distinct(const GeometricGraph& g, std::span<const std::size_t> s) {
  std::vector<char> seen(g.size(), 0);
  for (std::size_t v : s) {
    if (v >= g.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

bool is_independent(const GeometricGraph& g, std::span<const std::size_t> s) {
  if (!valid_distinct(g, s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_dominating(const GeometricGraph& g, std::span<const std::size_t> s) {
  if (!valid_distinct(g, s)) return false;
  std::vector<char> dom(g.size(), 0);
  for (std::size_t v : s) {
    dom[v] = 1;
    for (std::uint32_t u : g.neighbors(v)) dom[u] = 1;
  }
  return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

bool is_clique_partition(const GeometricGraph& g, const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<char> seen(g.size(), 0);
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= g.size() || seen[p[i]]) return false;
      seen[p[i]] = 1;
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (!g.adjacent(p[i], p[j])) return false;
      }
    }
    total += p.size();
  }
  return total == g.size();
}

bool is_matching(const GeometricGraph& g, std::span<const std::pair<std::size_t, std::size_t>> m) {
  std::vector<char> used(g.size(), 0);
  for (auto [a, b] : m) {
    if (a >= g.size() || b >= g.size() || a == b || used[a] || used[b] || !g.adjacent(a, b)) return false;
    used[a] = used[b] = 1;
  }
  return true;
}

bool is_edge_cover(const GeometricGraph& g, std::span<const std::pair<std::size_t, std::size_t>> e) {
  std::vector<char> cov(g.size(), 0);
  for (auto [a, b] : e) {
    if (a >= g.size() || b >= g.size() || !g.adjacent(a, b)) return false;
    cov[a] = cov[b] = 1;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 0 && !cov[v]) return false;
  }
  return true;
}

}  // namespace rgg
