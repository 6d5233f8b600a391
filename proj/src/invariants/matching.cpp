#include <algorithm>
#include <numeric>

#include "rgg/invariants/solvers.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg {

namespace {

constexpr std::size_t kNil = static_cast<std::size_t>(-1);

/// Edmonds' blossom algorithm (BFS augmentation with blossom contraction).
class Blossom {
 public:
  explicit Blossom(const GeometricGraph& g)
      : g_(g), n_(g.size()), match_(n_, kNil), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<std::size_t> run() {
    // greedy start, lowest-degree endpoints first
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g_.degree(a) < g_.degree(b); });
    for (std::size_t v : order) {
      if (match_[v] != kNil) continue;
      for (std::uint32_t u : g_.neighbors(v)) {
        if (match_[u] == kNil) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNil || g_.degree(v) == 0) continue;
      std::size_t end = find_path(v);
      while (end != kNil) {
        const std::size_t pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNil) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNil);
    std::iota(base_.begin(), base_.end(), std::size_t{0});
    used_[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::uint32_t to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNil && parent_[match_[to]] != kNil)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNil) {
          parent_[to] = v;
          if (match_[to] == kNil) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNil;
  }

  const GeometricGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

SolveResult matching_number(const GeometricGraph& g) {
  Stopwatch sw;
  SolveResult r;
  r.witness_kind = "edge_set";
  const auto mate = Blossom(g).run();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (mate[v] != kNil && v < mate[v]) r.edges.emplace_back(v, mate[v]);
  }
  r.value = r.lower = r.upper = static_cast<double>(r.edges.size());
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

SolveResult edge_cover_number(const GeometricGraph& g) {
  Stopwatch sw;
  SolveResult m = matching_number(g);
  SolveResult r;
  r.witness_kind = "edge_set";
  r.edges = m.edges;
  std::vector<char> covered(g.size(), 0);
  for (auto [a, b] : m.edges) covered[a] = covered[b] = 1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!covered[v] && g.degree(v) > 0) {
      const std::size_t u = g.neighbors(v)[0];
      r.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  r.value = r.lower = r.upper = static_cast<double>(r.edges.size());
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

}  // namespace rgg
