#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pum {

// A single point is passed around as a read-only view of its coordinates.
using PointView = std::span<const double>;

/// Contiguous storage for points of a common dimension.
///
/// Coordinates are stored row-major: point i occupies
/// [i * dim, (i + 1) * dim). Every coordinate is finite.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  PointView operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }

  void push_back(PointView p);
  void reserve(std::size_t n) { coords_.reserve(n * dim_); }

  // Points at the given positions, in the given order.
  PointSet subset(std::span<const std::size_t> indices) const;

  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

double squared_distance(PointView a, PointView b) noexcept;
double distance(PointView a, PointView b) noexcept;

}  // namespace pum
