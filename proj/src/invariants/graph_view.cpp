#include "rgg/invariants/graph_view.hpp"

#include <algorithm>

#include "rgg/errors.hpp"
#include "rgg/invariants/solve_result.hpp"

namespace rgg {

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "heur" || s == "heuristic") return Mode::heuristic;
  throw ValidationError("unknown solver mode '" + s + "' (expected exact or heur)");
}

const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "heur"; }

void Bits::fill() {
  std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
  if (n_ % 64) w_.back() = (std::uint64_t{1} << (n_ % 64)) - 1;
  if (n_ == 0) w_.clear();
}

bool Bits::any() const {
  for (auto x : w_) {
    if (x) return true;
  }
  return false;
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t Bits::first() const {
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
  }
  return n_;
}

std::size_t Bits::next(std::size_t i) const {
  ++i;
  if (i >= n_) return n_;
  std::size_t k = i >> 6;
  std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i & 63));
  for (;;) {
    if (x) return k * 64 + static_cast<std::size_t>(std::countr_zero(x));
    if (++k >= w_.size()) return n_;
    x = w_[k];
  }
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

Bits& Bits::subtract(const Bits& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  return *this;
}

bool Bits::intersects(const Bits& o) const {
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k] & o.w_[k]) return true;
  }
  return false;
}

bool Bits::subset_of(const Bits& o) const {
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k] & ~o.w_[k]) return false;
  }
  return true;
}

std::size_t Bits::count_and(const Bits& o) const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) c += static_cast<std::size_t>(std::popcount(w_[k] & o.w_[k]));
  return c;
}

DenseGraph DenseGraph::induced(const GeometricGraph& g, std::span<const std::size_t> vertices) {
  DenseGraph d;
  d.n = vertices.size();
  d.label.assign(vertices.begin(), vertices.end());
  d.adj.assign(d.n, Bits(d.n));
  std::vector<std::size_t> local(g.size(), d.n);
  for (std::size_t i = 0; i < d.n; ++i) local[vertices[i]] = i;
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::uint32_t u : g.neighbors(vertices[i])) {
      if (local[u] < d.n) d.adj[i].set(local[u]);
    }
  }
  d.closed = d.adj;
  for (std::size_t i = 0; i < d.n; ++i) d.closed[i].set(i);
  return d;
}

std::vector<std::vector<std::size_t>> ordered_components(const GeometricGraph& g) {
  const auto lex = g.points().lexicographic_order();
  std::vector<std::size_t> rank(g.size());
  for (std::size_t k = 0; k < lex.size(); ++k) rank[lex[k]] = k;
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : components(g)) {
    std::sort(c.members.begin(), c.members.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    out.push_back(std::move(c.members));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return rank[a.front()] < rank[b.front()]; });
  return out;
}

}  // namespace rgg
