#include <algorithm>
#include <queue>

#include "rgg/errors.hpp"
#include "rgg/invariants/interval.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg {

namespace {

/// Set-cover style branch and bound: branch on the undominated vertex with the
/// fewest admissible dominators; bound by a coverage count and a 2-packing.
class DomSearch {
 public:
  DomSearch(const DenseGraph& g, std::uint64_t cap, std::uint64_t& nodes)
      : g_(g), cap_(cap), nodes_(nodes), dominated_(g.n), excluded_(g.n), ball2_(g.n, Bits(g.n)) {
    for (std::size_t v = 0; v < g.n; ++v) {
      g.closed[v].for_each([&](std::size_t w) { ball2_[v] |= g.closed[w]; });
    }
  }

  std::vector<std::size_t> run(std::vector<std::size_t> seed) {
    best_ = std::move(seed);
    descend();
    return best_;
  }

 private:
  void descend() {
    if (++nodes_ > cap_) throw BudgetExceeded("domination_number: node cap exceeded");
    Bits open(g_.n);
    open.fill();
    open.subtract(dominated_);
    if (!open.any()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    std::size_t max_gain = 0;
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (!excluded_.test(v)) max_gain = std::max(max_gain, g_.closed[v].count_and(open));
    }
    if (max_gain == 0) return;
    const std::size_t open_count = open.count();
    std::size_t lb = (open_count + max_gain - 1) / max_gain;
    {
      // undominated vertices pairwise at distance >= 3 need distinct dominators
      Bits avail = open;
      std::size_t packing = 0;
      for (std::size_t u = avail.first(); u < g_.n; u = avail.first()) {
        ++packing;
        avail.subtract(ball2_[u]);
      }
      lb = std::max(lb, packing);
    }
    if (chosen_.size() + lb >= best_.size()) return;

    std::size_t pick = g_.n, fewest = g_.n + 1;
    open.for_each([&](std::size_t u) {
      Bits c = g_.closed[u];
      c.subtract(excluded_);
      const std::size_t k = c.count();
      if (k < fewest) fewest = k, pick = u;
    });
    if (fewest == 0) return;

    Bits cand = g_.closed[pick];
    cand.subtract(excluded_);
    std::vector<std::pair<std::size_t, std::size_t>> order;
    cand.for_each([&](std::size_t v) { order.emplace_back(g_.closed[v].count_and(open), v); });
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    const Bits saved_excluded = excluded_;
    for (const auto& [gain, v] : order) {
      (void)gain;
      const Bits saved = dominated_;
      chosen_.push_back(v);
      dominated_ |= g_.closed[v];
      descend();
      chosen_.pop_back();
      dominated_ = saved;
      excluded_.set(v);
      if (chosen_.size() + 1 >= best_.size()) break;
    }
    excluded_ = saved_excluded;
  }

  const DenseGraph& g_;
  std::uint64_t cap_;
  std::uint64_t& nodes_;
  Bits dominated_, excluded_;
  std::vector<Bits> ball2_;
  std::vector<std::size_t> chosen_, best_;
};

std::vector<std::size_t> dense_greedy_dominating(const DenseGraph& g) {
  Bits open(g.n);
  open.fill();
  std::vector<std::size_t> out;
  while (open.any()) {
    std::size_t best = 0, gain = 0;
    for (std::size_t v = 0; v < g.n; ++v) {
      const std::size_t k = g.closed[v].count_and(open);
      if (k > gain) gain = k, best = v;
    }
    out.push_back(best);
    open.subtract(g.closed[best]);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> dense_min_dominating(const DenseGraph& g, std::uint64_t node_cap, std::uint64_t& nodes) {
  DomSearch search(g, node_cap, nodes);
  auto out = search.run(dense_greedy_dominating(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> greedy_dominating_set(const GeometricGraph& g) {
  const std::size_t n = g.size();
  const auto lex = g.points().lexicographic_order();
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[lex[k]] = k;
  std::vector<char> dom(n, 0), in(n, 0);
  std::vector<std::size_t> gain(n);
  // lazy max-heap on (gain, -rank)
  using Item = std::pair<std::size_t, std::size_t>;
  auto cmp = [&](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first < b.first;
    return rank[a.second] > rank[b.second];
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  for (std::size_t v = 0; v < n; ++v) {
    gain[v] = g.degree(v) + 1;
    heap.emplace(gain[v], v);
  }
  std::size_t left = n;
  while (left > 0) {
    auto [gv, v] = heap.top();
    heap.pop();
    if (gv != gain[v]) continue;
    if (gv == 0) break;
    in[v] = 1;
    auto mark = [&](std::size_t u) {
      if (dom[u]) return;
      dom[u] = 1;
      --left;
      --gain[u];
      for (std::uint32_t w : g.neighbors(u)) --gain[w];
    };
    mark(v);
    for (std::uint32_t u : g.neighbors(v)) mark(u);
    for (std::uint32_t u : g.neighbors(v)) {
      if (!in[u]) heap.emplace(gain[u], u);
      for (std::uint32_t w : g.neighbors(u)) {
        if (!in[w]) heap.emplace(gain[w], w);
      }
    }
    heap.emplace(gain[v], v);
  }
  // drop redundant members: v is redundant if every vertex of N[v] keeps another dominator
  std::vector<std::size_t> cover(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) continue;
    ++cover[v];
    for (std::uint32_t u : g.neighbors(v)) ++cover[u];
  }
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t v = lex[k];
    if (!in[v] || cover[v] < 2) continue;
    bool redundant = true;
    for (std::uint32_t u : g.neighbors(v)) {
      if (cover[u] < 2) {
        redundant = false;
        break;
      }
    }
    if (!redundant) continue;
    in[v] = 0;
    --cover[v];
    for (std::uint32_t u : g.neighbors(v)) --cover[u];
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

SolveResult domination_number(const GeometricGraph& g, Mode mode, const SolverLimits& lim) {
  Stopwatch sw;
  SolveResult r;
  r.witness_kind = "vertex_set";
  if (mode == Mode::heuristic) {
    r.vertices = greedy_dominating_set(g);
    r.value = r.upper = static_cast<double>(r.vertices.size());
    double lb = 0.0;
    for (const auto& comp : ordered_components(g)) {
      std::size_t maxdeg = 0;
      for (std::size_t v : comp) maxdeg = std::max(maxdeg, g.degree(v));
      lb += static_cast<double>((comp.size() + maxdeg) / (maxdeg + 1));
    }
    r.lower = lb;
    r.exact = r.lower == r.upper;
    r.elapsed_ms = sw.elapsed_ms();
    return r;
  }
  std::uint64_t nodes = 0;
  for (const auto& comp : ordered_components(g)) {
    if (comp.size() <= 2) {
      r.vertices.push_back(comp.front());
      continue;
    }
    if (auto io = umbrella_order(g, comp)) {
      auto s = interval_min_dominating(*io);
      r.vertices.insert(r.vertices.end(), s.begin(), s.end());
      continue;
    }
    if (comp.size() > kDenseComponentCap) throw BudgetExceeded("domination_number: component too large for exact search");
    const DenseGraph dg = DenseGraph::induced(g, comp);
    for (std::size_t v : dense_min_dominating(dg, lim.node_cap, nodes)) r.vertices.push_back(dg.label[v]);
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  r.value = r.lower = r.upper = static_cast<double>(r.vertices.size());
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

}  // namespace rgg
