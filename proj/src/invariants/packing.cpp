#include "rgg/invariants/packing.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rgg/errors.hpp"
#include "rgg/invariants/graph_view.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/stopwatch.hpp"

namespace rgg {

Pattern Pattern::complete(std::size_t h) {
  Pattern p;
  p.name = "K" + std::to_string(h);
  p.h = h;
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) p.edges.emplace_back(i, j);
  }
  return p;
}

Pattern Pattern::path(std::size_t h) {
  Pattern p;
  p.name = "P" + std::to_string(h);
  p.h = h;
  for (std::size_t i = 0; i + 1 < h; ++i) p.edges.emplace_back(i, i + 1);
  return p;
}

Pattern Pattern::parse(const std::string& name) {
  if (name.size() < 2 || !std::isdigit(static_cast<unsigned char>(name[1])))
    throw ValidationError("pattern '" + name + "': expected K<h>, P<h>, C<h> or S<h>");
  const auto h = static_cast<std::size_t>(std::stoul(name.substr(1)));
  if (h < 2) throw ValidationError("pattern '" + name + "': need at least 2 vertices");
  switch (name[0]) {
    case 'K':
      return complete(h);
    case 'P':
      return path(h);
    case 'C': {
      if (h < 3) throw ValidationError("pattern '" + name + "': cycles need at least 3 vertices");
      Pattern p = path(h);
      p.name = name;
      p.edges.emplace_back(h - 1, 0);
      return p;
    }
    case 'S': {
      Pattern p;
      p.name = name;
      p.h = h;
      for (std::size_t i = 1; i < h; ++i) p.edges.emplace_back(0, i);
      return p;
    }
    default:
      throw ValidationError("pattern '" + name + "': unknown family");
  }
}

double packing_c3(std::span<const WeightedPattern> patterns) {
  double c3 = 0.0;
  for (const auto& wp : patterns) c3 = std::max(c3, wp.value / static_cast<double>(wp.pattern.h));
  return c3;
}

namespace {

bool contains_pattern(const GeometricGraph& g, const std::vector<std::size_t>& s, const Pattern& h) {
  std::vector<std::size_t> perm(s.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (auto [a, b] : h.edges) {
      if (!g.adjacent(s[perm[a]], s[perm[b]])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Connected vertex subsets of size h (ESU enumeration, each subset once).
template <class Fn>
void connected_subsets(const GeometricGraph& g, std::size_t h, Fn&& emit) {
  const std::size_t n = g.size();
  std::vector<std::size_t> sub;
  std::vector<char> in_sub(n, 0), in_nbhd(n, 0);
  auto extend = [&](auto&& self, std::vector<std::size_t> ext, std::size_t root) -> void {
    if (sub.size() == h) {
      emit(sub);
      return;
    }
    while (!ext.empty()) {
      const std::size_t w = ext.back();
      ext.pop_back();
      // exclusive neighbours of w: not in the subset and not adjacent to it
      std::vector<std::size_t> next = ext;
      for (std::uint32_t u : g.neighbors(w)) {
        if (u <= root || in_sub[u] || in_nbhd[u]) continue;
        if (std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
      }
      std::vector<std::size_t> marked;
      sub.push_back(w);
      in_sub[w] = 1;
      for (std::uint32_t u : g.neighbors(w)) {
        if (!in_nbhd[u]) {
          in_nbhd[u] = 1;
          marked.push_back(u);
        }
      }
      self(self, std::move(next), root);
      for (std::size_t u : marked) in_nbhd[u] = 0;
      in_sub[w] = 0;
      sub.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    sub.assign(1, v);
    in_sub[v] = 1;
    std::vector<std::size_t> marked;
    for (std::uint32_t u : g.neighbors(v)) {
      in_nbhd[u] = 1;
      marked.push_back(u);
    }
    in_nbhd[v] = 1;
    marked.push_back(v);
    std::vector<std::size_t> ext;
    for (std::uint32_t u : g.neighbors(v)) {
      if (u > v) ext.push_back(u);
    }
    extend(extend, std::move(ext), v);
    for (std::size_t u : marked) in_nbhd[u] = 0;
    in_sub[v] = 0;
  }
}

struct Candidate {
  std::vector<std::size_t> members;
  double value;
};

class SetPackingSearch {
 public:
  SetPackingSearch(std::size_t n, std::vector<Candidate> cands, double c3, std::uint64_t cap)
      : n_(n), cands_(std::move(cands)), c3_(c3), cap_(cap), by_vertex_(n), free_(n, 1) {
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      for (std::size_t v : cands_[i].members) by_vertex_[v].push_back(i);
    }
    // with a single (size, value) class the bound can be rounded down
    uniform_ = !cands_.empty();
    for (const auto& c : cands_) {
      uniform_ = uniform_ && c.members.size() == cands_[0].members.size() && c.value == cands_[0].value;
    }
  }

  std::vector<std::size_t> run(std::vector<std::size_t> seed, double seed_value) {
    best_ = std::move(seed);
    best_value_ = seed_value;
    descend(0.0);
    return best_;
  }
  double best_value() const { return best_value_; }

 private:
  bool usable(std::size_t i) const {
    for (std::size_t v : cands_[i].members) {
      if (!free_[v]) return false;
    }
    return true;
  }

  double bound(std::size_t coverable) const {
    if (uniform_) {
      const std::size_t h = cands_[0].members.size();
      return cands_[0].value * static_cast<double>(coverable / h);
    }
    return c3_ * static_cast<double>(coverable);
  }

  void descend(double value) {
    if (++nodes_ > cap_) throw BudgetExceeded("h_packing_number: node cap exceeded");
    // branch on the coverable vertex with the fewest usable copies
    std::size_t coverable = 0;
    std::size_t pick = n_, pick_count = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!free_[v]) continue;
      std::size_t count = 0;
      for (std::size_t i : by_vertex_[v]) count += usable(i);
      if (count == 0) continue;
      ++coverable;
      if (pick == n_ || count < pick_count) {
        pick = v;
        pick_count = count;
      }
    }
    if (pick == n_) {
      if (value > best_value_ + 1e-12) {
        best_value_ = value;
        best_ = chosen_;
      }
      return;
    }
    if (value + bound(coverable) <= best_value_ + 1e-12) return;
    for (std::size_t i : by_vertex_[pick]) {
      if (!usable(i)) continue;
      for (std::size_t v : cands_[i].members) free_[v] = 0;
      chosen_.push_back(i);
      descend(value + cands_[i].value);
      chosen_.pop_back();
      for (std::size_t v : cands_[i].members) free_[v] = 1;
    }
    free_[pick] = 0;
    descend(value);
    free_[pick] = 1;
  }

  std::size_t n_;
  std::vector<Candidate> cands_;
  double c3_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool uniform_ = false;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<char> free_;
  std::vector<std::size_t> chosen_, best_;
  double best_value_ = 0.0;
};

}  // namespace

std::vector<std::vector<std::size_t>> pattern_embeddings(const GeometricGraph& g, const Pattern& h) {
  std::vector<std::vector<std::size_t>> out;
  if (h.h == 0 || h.h > g.size()) return out;
  connected_subsets(g, h.h, [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (contains_pattern(g, sorted, h)) out.push_back(std::move(sorted));
  });
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult multi_pattern_packing(const GeometricGraph& g, std::span<const WeightedPattern> patterns, Mode mode,
                                  const SolverLimits& lim) {
  Stopwatch sw;
  SolveResult r;
  r.witness_kind = "partition";
  if (patterns.empty()) throw ValidationError("multi_pattern_packing: empty pattern list");
  for (const auto& wp : patterns) {
    if (!(wp.value > 0.0)) throw ValidationError("multi_pattern_packing: pattern values must be positive");
  }
  bool exact = mode == Mode::exact;
  for (const auto& wp : patterns) exact = exact && wp.pattern.h <= kMaxExactPattern;

  std::vector<Candidate> cands;
  for (const auto& wp : patterns) {
    for (auto& s : pattern_embeddings(g, wp.pattern)) cands.push_back(Candidate{std::move(s), wp.value});
  }
  // greedy: highest value per vertex first, then lexicographic
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].value / static_cast<double>(cands[a].members.size()) >
           cands[b].value / static_cast<double>(cands[b].members.size());
  });
  std::vector<char> used(g.size(), 0);
  std::vector<std::size_t> greedy;
  double greedy_value = 0.0;
  for (std::size_t i : order) {
    const auto& m = cands[i].members;
    if (std::any_of(m.begin(), m.end(), [&](std::size_t v) { return used[v] != 0; })) continue;
    for (std::size_t v : m) used[v] = 1;
    greedy.push_back(i);
    greedy_value += cands[i].value;
  }
  const double c3 = packing_c3(patterns);
  std::vector<std::size_t> pick = greedy;
  double value = greedy_value;
  if (exact) {
    // copies never straddle components, so each is searched on its own
    std::vector<std::size_t> comp_of(g.size(), 0), local(g.size(), 0);
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (std::size_t k = 0; k < comps[c].members.size(); ++k) {
        comp_of[comps[c].members[k]] = c;
        local[comps[c].members[k]] = k;
      }
    }
    std::vector<std::vector<std::size_t>> cand_ids(comps.size()), seed_ids(comps.size());
    for (std::size_t i = 0; i < cands.size(); ++i) cand_ids[comp_of[cands[i].members[0]]].push_back(i);
    pick.clear();
    value = 0.0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto& ids = cand_ids[c];
      if (ids.empty()) continue;
      std::vector<Candidate> lc;
      for (std::size_t i : ids) {
        Candidate k{cands[i].members, cands[i].value};
        for (auto& v : k.members) v = local[v];
        lc.push_back(std::move(k));
      }
      std::vector<std::size_t> seed;
      double seed_value = 0.0;
      for (std::size_t gi : greedy) {
        const auto it = std::lower_bound(ids.begin(), ids.end(), gi);
        if (it != ids.end() && *it == gi) {
          seed.push_back(static_cast<std::size_t>(it - ids.begin()));
          seed_value += cands[gi].value;
        }
      }
      SetPackingSearch search(comps[c].members.size(), std::move(lc), c3, lim.node_cap);
      for (std::size_t li : search.run(seed, seed_value)) pick.push_back(ids[li]);
      value += search.best_value();
    }
  }
  for (std::size_t i : pick) r.parts.push_back(cands[i].members);
  std::sort(r.parts.begin(), r.parts.end());
  r.value = value;
  r.exact = exact;
  r.lower = value;
  r.upper = exact ? value : c3 * static_cast<double>(g.size());
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

SolveResult h_packing_number(const GeometricGraph& g, const Pattern& h, Mode mode, const SolverLimits& lim) {
  if (h.h == 2) {
    SolveResult m = matching_number(g);
    m.witness_kind = "partition";
    for (auto [a, b] : m.edges) m.parts.push_back({a, b});
    m.edges.clear();
    return m;
  }
  const WeightedPattern wp{h, 1.0};
  return multi_pattern_packing(g, std::span<const WeightedPattern>(&wp, 1), mode, lim);
}

}  // namespace rgg
