#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rgg {

/// Finite ordered set of points in R^d, stored row-major. Order is the
/// generative order X_1, X_2, ... and is preserved by every operation that
/// does not explicitly reorder.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim);
  PointSet(int dim, std::vector<double> coords);
  PointSet(int dim, std::initializer_list<std::initializer_list<double>> rows);

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  double coord(std::size_t i, int axis) const { return coords_[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(axis)]; }
  std::span<const double> coords() const { return coords_; }

  void push_back(std::span<const double> p);
  void reserve(std::size_t n) { coords_.reserve(n * static_cast<std::size_t>(dim_)); }

  PointSet subset(std::span<const std::size_t> indices) const;
  /// Concatenation; callers guarantee disjointness where it matters.
  PointSet joined(const PointSet& other) const;
  /// Copy with one extra point appended.
  PointSet with_point(std::span<const double> p) const;

  /// Throws ValidationError on non-finite coordinates or repeated points.
  void validate() const;
  bool has_duplicates() const;

  /// Index order sorted lexicographically by coordinates, ties by index.
  std::vector<std::size_t> lexicographic_order() const;

  double squared_distance(std::size_t i, std::size_t j) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_ = 0;
  std::vector<double> coords_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

/// CSV format: first line `dim,<d>`, then one comma-separated row per point.
void write_csv(std::ostream& out, const PointSet& ps);
PointSet read_csv(std::istream& in);
PointSet read_csv_file(const std::string& path);
void write_csv_file(const std::string& path, const PointSet& ps);
std::string to_csv_string(const PointSet& ps);

}  // namespace rgg
