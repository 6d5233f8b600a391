#include "rgg/point_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "rgg/errors.hpp"

namespace rgg {

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim <= 0) throw ValidationError("PointSet: dimension must be positive");
}

PointSet::PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim <= 0) throw ValidationError("PointSet: dimension must be positive");
  if (coords_.size() % static_cast<std::size_t>(dim) != 0)
    throw ValidationError("PointSet: coordinate count is not a multiple of the dimension");
}

PointSet::PointSet(int dim, std::initializer_list<std::initializer_list<double>> rows) : PointSet(dim) {
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(dim)) throw ValidationError("PointSet: row has wrong dimension");
    coords_.insert(coords_.end(), row.begin(), row.end());
  }
}

void PointSet::push_back(std::span<const double> p) {
  if (p.size() != static_cast<std::size_t>(dim_)) throw ValidationError("PointSet::push_back: wrong dimension");
  coords_.insert(coords_.end(), p.begin(), p.end());
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(dim_);
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back((*this)[i]);
  return out;
}

PointSet PointSet::joined(const PointSet& other) const {
  if (empty() && dim_ == 0) return other;
  if (other.dim_ != dim_ && !other.empty()) throw ValidationError("PointSet::joined: dimension mismatch");
  PointSet out = *this;
  out.coords_.insert(out.coords_.end(), other.coords_.begin(), other.coords_.end());
  return out;
}

PointSet PointSet::with_point(std::span<const double> p) const {
  PointSet out = *this;
  out.push_back(p);
  return out;
}

std::vector<std::size_t> PointSet::lexicographic_order() const {
  std::vector<std::size_t> idx(size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
    auto pa = (*this)[a];
    auto pb = (*this)[b];
    for (int k = 0; k < dim_; ++k) {
      if (pa[k] != pb[k]) return pa[k] < pb[k];
    }
    return a < b;
  });
  return idx;
}

bool PointSet::has_duplicates() const {
  const auto order = lexicographic_order();
  for (std::size_t k = 1; k < order.size(); ++k) {
    auto a = (*this)[order[k - 1]];
    auto b = (*this)[order[k]];
    if (std::equal(a.begin(), a.end(), b.begin())) return true;
  }
  return false;
}

void PointSet::validate() const {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw ValidationError("PointSet: non-finite coordinate");
  }
  if (has_duplicates()) throw ValidationError("PointSet: repeated point");
}

double PointSet::squared_distance(std::size_t i, std::size_t j) const {
  return rgg::squared_distance((*this)[i], (*this)[j]);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

void write_csv(std::ostream& out, const PointSet& ps) {
  out << "dim," << ps.dim() << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto p = ps[i];
    for (int k = 0; k < ps.dim(); ++k) {
      if (k) out << ',';
      out << p[k];
    }
    out << '\n';
  }
}

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

PointSet read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("point CSV: missing header");
  line = trim(line);
  if (line.rfind("dim,", 0) != 0) throw ValidationError("point CSV: header must be 'dim,<d>'");
  int dim = 0;
  try {
    dim = std::stoi(line.substr(4));
  } catch (const std::exception&) {
    throw ValidationError("point CSV: bad dimension in header");
  }
  PointSet ps(dim);
  std::vector<double> row;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    row.clear();
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        field = trim(field);
        row.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError("point CSV: bad number on line " + std::to_string(line_no));
      }
    }
    if (row.size() != static_cast<std::size_t>(dim))
      throw ValidationError("point CSV: wrong field count on line " + std::to_string(line_no));
    ps.push_back(row);
  }
  ps.validate();
  return ps;
}

PointSet read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open point file: " + path);
  return read_csv(in);
}

void write_csv_file(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write point file: " + path);
  write_csv(out, ps);
}

std::string to_csv_string(const PointSet& ps) {
  std::ostringstream out;
  write_csv(out, ps);
  return out.str();
}

}  // namespace rgg
