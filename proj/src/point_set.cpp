#include "pum/point_set.hpp"

#include <cmath>
#include <string>

#include "pum/error.hpp"

namespace pum {

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ConfigError("point dimension must be positive");
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim == 0) throw ConfigError("point dimension must be positive");
  if (coords_.size() % dim != 0) {
    throw ConfigError("coordinate count " + std::to_string(coords_.size()) +
                      " is not a multiple of dimension " + std::to_string(dim));
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k])) {
      throw ConfigError("point " + std::to_string(k / dim) + " has a non-finite coordinate");
    }
  }
}

void PointSet::push_back(PointView p) {
  if (p.size() != dim_) {
    throw ConfigError("point of dimension " + std::to_string(p.size()) +
                      " added to a set of dimension " + std::to_string(dim_));
  }
  for (double c : p) {
    if (!std::isfinite(c)) throw ConfigError("non-finite coordinate");
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(dim_);
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    auto p = (*this)[i];
    out.coords_.insert(out.coords_.end(), p.begin(), p.end());
  }
  return out;
}

double squared_distance(PointView a, PointView b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

double distance(PointView a, PointView b) noexcept { return std::sqrt(squared_distance(a, b)); }

}  // namespace pum
