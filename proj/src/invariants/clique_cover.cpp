#include <algorithm>

#include "rgg/errors.hpp"
#include "rgg/invariants/interval.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg {

namespace {

/// Exact colouring of the complement with DSATUR branching: each colour
/// class is a clique of G. A class records the vertices still able to join it.
class CliquePartitionSearch {
 public:
  CliquePartitionSearch(const DenseGraph& g, std::size_t lower, std::uint64_t cap, std::uint64_t& nodes)
      : g_(g), lower_(lower), cap_(cap), nodes_(nodes), owner_(g.n, kNone) {}

  std::vector<std::vector<std::size_t>> run(std::vector<std::vector<std::size_t>> seed) {
    best_ = std::move(seed);
    if (best_.size() > lower_) descend(0);
    return best_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Clique {
    std::vector<std::size_t> members;
    Bits joinable;
  };

  void descend(std::size_t coloured) {
    if (best_.size() <= lower_) return;
    if (++nodes_ > cap_) throw BudgetExceeded("clique_cover_number: node cap exceeded");
    if (coloured == g_.n) {
      if (cliques_.size() < best_.size()) {
        best_.clear();
        for (const auto& c : cliques_) best_.push_back(c.members);
      }
      return;
    }
    // most constrained vertex: fewest cliques it may join, ties by fewest G-neighbours
    std::size_t pick = kNone, pick_join = kNone, pick_deg = kNone;
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (owner_[v] != kNone) continue;
      std::size_t join = 0;
      for (const auto& c : cliques_) join += c.joinable.test(v);
      const std::size_t dv = g_.adj[v].count();
      if (join < pick_join || (join == pick_join && dv < pick_deg)) pick = v, pick_join = join, pick_deg = dv;
    }
    const std::size_t v = pick;
    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      if (!cliques_[k].joinable.test(v)) continue;
      Bits saved = cliques_[k].joinable;
      cliques_[k].members.push_back(v);
      cliques_[k].joinable &= g_.adj[v];
      owner_[v] = k;
      descend(coloured + 1);
      owner_[v] = kNone;
      cliques_[k].members.pop_back();
      cliques_[k].joinable = std::move(saved);
      if (best_.size() <= lower_) return;
    }
    if (cliques_.size() + 1 < best_.size()) {
      cliques_.push_back(Clique{{v}, g_.adj[v]});
      owner_[v] = cliques_.size() - 1;
      descend(coloured + 1);
      owner_[v] = kNone;
      cliques_.pop_back();
    }
  }

  const DenseGraph& g_;
  std::size_t lower_;
  std::uint64_t cap_;
  std::uint64_t& nodes_;
  std::vector<std::size_t> owner_;
  std::vector<Clique> cliques_;
  std::vector<std::vector<std::size_t>> best_;
};

std::vector<std::vector<std::size_t>> dense_greedy_partition(const DenseGraph& g) {
  Bits left(g.n);
  left.fill();
  std::vector<std::vector<std::size_t>> out;
  while (left.any()) {
    std::vector<std::size_t> c;
    Bits cand = left;
    for (std::size_t v = cand.first(); v < g.n; v = cand.first()) {
      c.push_back(v);
      cand.reset(v);
      cand &= g.adj[v];
    }
    for (std::size_t v : c) left.reset(v);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> dense_min_clique_partition(const DenseGraph& g, std::size_t lower_bound,
                                                                 std::uint64_t node_cap, std::uint64_t& nodes) {
  CliquePartitionSearch search(g, lower_bound, node_cap, nodes);
  return search.run(dense_greedy_partition(g));
}

std::vector<std::vector<std::size_t>> greedy_clique_partition(const GeometricGraph& g) {
  const std::size_t n = g.size();
  std::vector<char> used(n, 0);
  std::vector<std::vector<std::size_t>> out;
  const auto order = g.points().lexicographic_order();
  for (std::size_t v : order) {
    if (used[v]) continue;
    std::vector<std::size_t> c{v};
    used[v] = 1;
    for (std::uint32_t u : g.neighbors(v)) {
      if (used[u]) continue;
      bool ok = true;
      for (std::size_t w : c) {
        if (w != v && !g.adjacent(u, w)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        c.push_back(u);
        used[u] = 1;
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

SolveResult clique_cover_number(const GeometricGraph& g, Mode mode, const SolverLimits& lim) {
  Stopwatch sw;
  SolveResult r;
  r.witness_kind = "partition";
  if (mode == Mode::heuristic) {
    r.parts = greedy_clique_partition(g);
    r.value = r.upper = static_cast<double>(r.parts.size());
    r.lower = static_cast<double>(greedy_independent_set(g).size());
    r.exact = r.lower == r.upper;
    r.elapsed_ms = sw.elapsed_ms();
    return r;
  }
  std::uint64_t nodes = 0;
  for (const auto& comp : ordered_components(g)) {
    if (comp.size() <= 2) {
      r.parts.push_back(comp);  // K1 or K2
      continue;
    }
    if (auto io = umbrella_order(g, comp)) {
      for (auto& p : interval_min_clique_partition(*io)) r.parts.push_back(std::move(p));
      continue;
    }
    if (comp.size() > kDenseComponentCap) throw BudgetExceeded("clique_cover_number: component too large for exact search");
    const DenseGraph dg = DenseGraph::induced(g, comp);
    const std::size_t alpha = dense_max_independent(dg, lim.node_cap, nodes).size();
    for (const auto& p : dense_min_clique_partition(dg, alpha, lim.node_cap, nodes)) {
      std::vector<std::size_t> q;
      for (std::size_t v : p) q.push_back(dg.label[v]);
      std::sort(q.begin(), q.end());
      r.parts.push_back(std::move(q));
    }
  }
  r.value = r.lower = r.upper = static_cast<double>(r.parts.size());
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

}  // namespace rgg
