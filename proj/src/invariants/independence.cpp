#include <algorithm>
#include <numeric>

#include "rgg/errors.hpp"
#include "rgg/invariants/interval.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg {

namespace {

/// Maximum clique of the complement (= maximum independent set of G) with
/// greedy clique-cover bounds, in the style of MCQ.
class MisSearch {
 public:
  MisSearch(const DenseGraph& g, std::span<const std::size_t> verts, std::uint64_t cap, std::uint64_t& nodes)
      : cap_(cap), nodes_(nodes) {
    // low G-degree first: those vertices tend to be in large independent sets
    order_.assign(verts.begin(), verts.end());
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.adj[a].count() < g.adj[b].count();
    });
    const std::size_t m = order_.size();
    adj_.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i].set(j);
      }
    }
  }

  std::vector<std::size_t> run(std::vector<std::size_t> seed_solution) {
    best_ = std::move(seed_solution);
    Bits all(order_.size());
    all.fill();
    expand(all);
    return best_;
  }

 private:
  void expand(Bits p) {
    if (++nodes_ > cap_) throw BudgetExceeded("independence_number: node cap exceeded");
    // greedy partition of p into cliques of G; colour c bounds anything chosen from classes 1..c
    std::vector<std::pair<std::size_t, std::size_t>> seq;
    Bits u = p;
    std::size_t colour = 0;
    while (u.any()) {
      ++colour;
      Bits q = u;
      for (std::size_t v = q.first(); v < q.size(); v = q.first()) {
        u.reset(v);
        q.reset(v);
        q &= adj_[v];
        seq.emplace_back(v, colour);
      }
    }
    for (std::size_t i = seq.size(); i-- > 0;) {
      const auto [v, c] = seq[i];
      if (cur_.size() + c <= best_.size()) return;
      cur_.push_back(order_[v]);
      Bits np = p;
      np.subtract(adj_[v]);
      np.reset(v);
      if (np.any()) {
        expand(std::move(np));
      } else if (cur_.size() > best_.size()) {
        best_ = cur_;
      }
      cur_.pop_back();
      p.reset(v);
    }
  }

  std::uint64_t cap_;
  std::uint64_t& nodes_;
  std::vector<std::size_t> order_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> cur_, best_;
};

bool is_clique_in(const DenseGraph& g, const Bits& s) {
  bool ok = true;
  s.for_each([&](std::size_t u) {
    if (!ok) return;
    Bits rest = s;
    rest.reset(u);
    if (!rest.subset_of(g.adj[u])) ok = false;
  });
  return ok;
}

std::vector<std::vector<std::size_t>> split_components(const DenseGraph& g, const Bits& remaining) {
  std::vector<std::vector<std::size_t>> out;
  Bits left = remaining;
  while (left.any()) {
    std::vector<std::size_t> comp;
    Bits frontier(g.n);
    frontier.set(left.first());
    left.reset(left.first());
    while (frontier.any()) {
      Bits next(g.n);
      frontier.for_each([&](std::size_t v) {
        comp.push_back(v);
        next |= g.adj[v];
      });
      next &= left;
      left.subtract(next);
      frontier = std::move(next);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Greedy min-degree independent set on a local vertex subset.
std::vector<std::size_t> dense_greedy(const DenseGraph& g, std::span<const std::size_t> verts) {
  Bits left(g.n);
  for (std::size_t v : verts) left.set(v);
  std::vector<std::size_t> out;
  while (left.any()) {
    std::size_t best = g.n, bd = g.n + 1;
    left.for_each([&](std::size_t v) {
      const std::size_t dv = g.adj[v].count_and(left);
      if (dv < bd) bd = dv, best = v;
    });
    out.push_back(best);
    left.subtract(g.closed[best]);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> dense_max_independent(const DenseGraph& g, std::uint64_t node_cap, std::uint64_t& nodes) {
  Bits remaining(g.n);
  remaining.fill();
  std::vector<std::size_t> taken;
  // simplicial reduction: a vertex whose neighbourhood is a clique lies in some maximum independent set
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = remaining.first(); v < g.n; v = remaining.next(v)) {
      Bits nb = g.adj[v];
      nb &= remaining;
      if (is_clique_in(g, nb)) {
        taken.push_back(v);
        remaining.subtract(g.closed[v]);
        changed = true;
      }
    }
  }
  for (const auto& comp : split_components(g, remaining)) {
    auto seed = dense_greedy(g, comp);
    MisSearch search(g, comp, node_cap, nodes);
    auto best = search.run(std::move(seed));
    taken.insert(taken.end(), best.begin(), best.end());
  }
  std::sort(taken.begin(), taken.end());
  return taken;
}

std::vector<std::size_t> greedy_independent_set(const GeometricGraph& g) {
  const std::size_t n = g.size();
  // bucket queue on current degree
  std::vector<std::size_t> deg(n);
  std::size_t maxdeg = 0;
  for (std::size_t v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v] = g.degree(v));
  std::vector<std::vector<std::size_t>> bucket(maxdeg + 1);
  for (std::size_t v = n; v-- > 0;) bucket[deg[v]].push_back(v);
  std::vector<char> gone(n, 0), in(n, 0);
  std::size_t lowest = 0;
  for (std::size_t removed = 0; removed < n;) {
    while (lowest <= maxdeg && bucket[lowest].empty()) ++lowest;
    const std::size_t v = bucket[lowest].back();
    bucket[lowest].pop_back();
    if (gone[v] || deg[v] != lowest) continue;  // stale entry
    in[v] = 1;
    gone[v] = 1;
    ++removed;
    for (std::uint32_t u : g.neighbors(v)) {
      if (gone[u]) continue;
      gone[u] = 1;
      ++removed;
      for (std::uint32_t w : g.neighbors(u)) {
        if (gone[w]) continue;
        --deg[w];
        bucket[deg[w]].push_back(w);
        lowest = std::min(lowest, deg[w]);
      }
    }
  }

  // (1,2)-swaps: drop x, add two non-adjacent vertices whose only solution neighbour is x
  std::vector<std::size_t> tight(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) continue;
    for (std::uint32_t u : g.neighbors(v)) ++tight[u];
  }
  auto add = [&](std::size_t v) {
    in[v] = 1;
    for (std::uint32_t u : g.neighbors(v)) ++tight[u];
  };
  auto drop = [&](std::size_t v) {
    in[v] = 0;
    for (std::uint32_t u : g.neighbors(v)) --tight[u];
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in[x]) continue;
      std::vector<std::size_t> cand;
      for (std::uint32_t u : g.neighbors(x)) {
        if (!in[u] && tight[u] == 1) cand.push_back(u);
      }
      bool done = false;
      for (std::size_t i = 0; i < cand.size() && !done; ++i) {
        for (std::size_t j = i + 1; j < cand.size() && !done; ++j) {
          if (g.adjacent(cand[i], cand[j])) continue;
          drop(x);
          add(cand[i]);
          add(cand[j]);
          // any further free candidates can join too
          for (std::size_t k = 0; k < cand.size(); ++k) {
            if (!in[cand[k]] && tight[cand[k]] == 0) add(cand[k]);
          }
          done = improved = true;
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

SolveResult independence_number(const GeometricGraph& g, Mode mode, const SolverLimits& lim) {
  Stopwatch sw;
  SolveResult r;
  r.witness_kind = "vertex_set";
  if (mode == Mode::heuristic) {
    r.vertices = greedy_independent_set(g);
    r.value = r.lower = static_cast<double>(r.vertices.size());
    r.upper = static_cast<double>(greedy_clique_partition(g).size());
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
      auto s = interval_max_independent(*io);
      r.vertices.insert(r.vertices.end(), s.begin(), s.end());
      continue;
    }
    if (comp.size() > kDenseComponentCap) throw BudgetExceeded("independence_number: component too large for exact search");
    const DenseGraph dg = DenseGraph::induced(g, comp);
    for (std::size_t v : dense_max_independent(dg, lim.node_cap, nodes)) r.vertices.push_back(dg.label[v]);
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  r.value = r.lower = r.upper = static_cast<double>(r.vertices.size());
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

SolveResult vertex_cover_number(const GeometricGraph& g, Mode mode, const SolverLimits& lim) {
  SolveResult a = independence_number(g, mode, lim);
  SolveResult r;
  const double n = static_cast<double>(g.size());
  r.exact = a.exact;
  r.value = n - a.value;
  r.lower = n - a.upper;
  r.upper = n - a.lower;
  r.witness_kind = "vertex_set";
  std::vector<char> in(g.size(), 0);
  for (std::size_t v : a.vertices) in[v] = 1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!in[v]) r.vertices.push_back(v);
  }
  r.elapsed_ms = a.elapsed_ms;
  return r;
}

}  // namespace rgg
