#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rgg/geograph.hpp"

namespace rgg {

/// Fixed-width dynamic bitset, the working set type of the exact solvers.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return w_.size(); }
  std::uint64_t* data() { return w_.data(); }
  const std::uint64_t* data() const { return w_.data(); }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void fill();
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  bool any() const;
  std::size_t count() const;
  /// First set index, or size() when empty.
  std::size_t first() const;
  /// Next set index after i, or size().
  std::size_t next(std::size_t i) const;

  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  /// this &= ~o
  Bits& subtract(const Bits& o);
  bool intersects(const Bits& o) const;
  bool subset_of(const Bits& o) const;
  std::size_t count_and(const Bits& o) const;

  friend bool operator==(const Bits&, const Bits&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Induced subgraph on a vertex list, relabelled 0..m-1, with bitset rows.
/// label[i] is the original vertex id of local vertex i.
struct DenseGraph {
  std::size_t n = 0;
  std::vector<std::size_t> label;
  std::vector<Bits> adj;     // open neighbourhoods
  std::vector<Bits> closed;  // closed neighbourhoods

  static DenseGraph induced(const GeometricGraph& g, std::span<const std::size_t> vertices);
  bool adjacent(std::size_t u, std::size_t v) const { return adj[u].test(v); }
  std::size_t degree(std::size_t v) const { return adj[v].count(); }
};

/// Connected components with member lists sorted lexicographically by
/// coordinates (ties by index); the fixed vertex order of all solvers.
std::vector<std::vector<std::size_t>> ordered_components(const GeometricGraph& g);

}  // namespace rgg
