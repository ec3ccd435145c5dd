#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pum/point_set.hpp"

namespace pum {

/// Static kd-tree for closed-ball range queries.
///
/// Internal nodes split at the median of the axis with the greatest
/// coordinate spread; ties on the median are broken by original index, so
/// the tree is a deterministic function of the input order. Leaves hold at
/// most `bucket_size` points and are scanned linearly.
///
/// Immutable after construction; concurrent queries are safe.
class KdTree {
 public:
  static constexpr std::size_t kDefaultBucketSize = 16;

  struct Node {
    std::size_t begin = 0;  // range into the permutation array
    std::size_t end = 0;
    std::uint32_t left = 0;  // child node ids, 0 for leaves
    std::uint32_t right = 0;
    std::uint32_t axis = 0;
    double split = 0.0;

    bool is_leaf() const noexcept { return left == 0; }
  };

  struct QueryStats {
    std::size_t nodes_visited = 0;
  };

  // Throws ConfigError for an empty point set or a zero bucket size.
  explicit KdTree(PointSet points, std::size_t bucket_size = kDefaultBucketSize);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.dim(); }
  std::size_t bucket_size() const noexcept { return bucket_size_; }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  std::size_t depth() const noexcept;

  /// Indices i with |points[i] - center| <= radius, ascending.
  /// Throws ConfigError for a negative radius or dimension mismatch.
  std::vector<std::size_t> range_query(PointView center, double radius,
                                       QueryStats* stats = nullptr) const;

  // Same as range_query, appending to `out` without sorting or clearing.
  void range_query_unsorted(PointView center, double radius, std::vector<std::size_t>& out,
                            QueryStats* stats = nullptr) const;

  struct Nearest {
    std::size_t index = 0;
    double distance = 0.0;
  };

  /// Closest stored point; ties resolve to the lowest index.
  Nearest nearest(PointView query) const;

 private:
  std::uint32_t build(std::size_t begin, std::size_t end);
  double box_squared_distance(std::uint32_t node, PointView p) const noexcept;

  PointSet points_;
  std::size_t bucket_size_;
  std::vector<std::size_t> perm_;
  std::vector<Node> nodes_;
  // Per-node axis-aligned bounding boxes: dim lows then dim highs.
  std::vector<double> boxes_;
};

}  // namespace pum
