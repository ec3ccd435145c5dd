#include "pum/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pum/error.hpp"

namespace pum {

KdTree::KdTree(PointSet points, std::size_t bucket_size)
    : points_(std::move(points)), bucket_size_(bucket_size) {
  if (points_.empty()) throw ConfigError("cannot build a kd-tree over an empty point set");
  if (bucket_size_ == 0) throw ConfigError("kd-tree bucket size must be positive");
  perm_.resize(points_.size());
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  // Node 0 is the root; child id 0 therefore means "no child".
  nodes_.reserve(2 * (points_.size() / bucket_size_ + 1));
  build(0, points_.size());
}

std::uint32_t KdTree::build(std::size_t begin, std::size_t end) {
  const std::size_t dim = points_.dim();
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{begin, end});
  boxes_.resize(boxes_.size() + 2 * dim);

  double* lo = boxes_.data() + id * 2 * dim;
  double* hi = lo + dim;
  std::fill(lo, lo + dim, std::numeric_limits<double>::infinity());
  std::fill(hi, hi + dim, -std::numeric_limits<double>::infinity());
  for (std::size_t i = begin; i < end; ++i) {
    const auto p = points_[perm_[i]];
    for (std::size_t k = 0; k < dim; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  if (end - begin <= bucket_size_) return id;

  std::uint32_t axis = 0;
  double spread = -1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (hi[k] - lo[k] > spread) {
      spread = hi[k] - lo[k];
      axis = static_cast<std::uint32_t>(k);
    }
  }
  // All points identical: nothing to split on.
  if (spread <= 0.0) return id;

  const std::size_t mid = begin + (end - begin) / 2;
  auto less = [&](std::size_t a, std::size_t b) {
    const double ca = points_[a][axis];
    const double cb = points_[b][axis];
    return ca < cb || (ca == cb && a < b);
  };
  std::nth_element(perm_.begin() + static_cast<std::ptrdiff_t>(begin),
                   perm_.begin() + static_cast<std::ptrdiff_t>(mid),
                   perm_.begin() + static_cast<std::ptrdiff_t>(end), less);
  const double split = points_[perm_[mid]][axis];

  const std::uint32_t left = build(begin, mid);
  const std::uint32_t right = build(mid, end);
  Node& node = nodes_[id];
  node.left = left;
  node.right = right;
  node.axis = axis;
  node.split = split;
  return id;
}

std::size_t KdTree::depth() const noexcept {
  std::size_t best = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 1}};
  while (!stack.empty()) {
    auto [id, level] = stack.back();
    stack.pop_back();
    best = std::max(best, level);
    if (!nodes_[id].is_leaf()) {
      stack.emplace_back(nodes_[id].left, level + 1);
      stack.emplace_back(nodes_[id].right, level + 1);
    }
  }
  return best;
}

double KdTree::box_squared_distance(std::uint32_t node, PointView p) const noexcept {
  const std::size_t dim = points_.dim();
  const double* lo = boxes_.data() + node * 2 * dim;
  const double* hi = lo + dim;
  double s = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    double d = 0.0;
    if (p[k] < lo[k]) {
      d = lo[k] - p[k];
    } else if (p[k] > hi[k]) {
      d = p[k] - hi[k];
    }
    s += d * d;
  }
  return s;
}

void KdTree::range_query_unsorted(PointView center, double radius, std::vector<std::size_t>& out,
                                  QueryStats* stats) const {
  if (center.size() != points_.dim()) {
    throw ConfigError("range query of dimension " + std::to_string(center.size()) +
                      " against a tree of dimension " + std::to_string(points_.dim()));
  }
  if (!(radius >= 0.0)) throw ConfigError("range query radius must be nonnegative");

  const double r2 = radius * radius;
  std::uint32_t stack[128];
  std::size_t top = 0;
  stack[top++] = 0;
  std::size_t visited = 0;
  while (top > 0) {
    const std::uint32_t id = stack[--top];
    ++visited;
    if (box_squared_distance(id, center) > r2) continue;
    const Node& node = nodes_[id];
    if (node.is_leaf()) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        if (squared_distance(points_[perm_[i]], center) <= r2) out.push_back(perm_[i]);
      }
    } else {
      stack[top++] = node.right;
      stack[top++] = node.left;
    }
  }
  if (stats != nullptr) stats->nodes_visited += visited;
}

std::vector<std::size_t> KdTree::range_query(PointView center, double radius,
                                             QueryStats* stats) const {
  std::vector<std::size_t> out;
  range_query_unsorted(center, radius, out, stats);
  std::sort(out.begin(), out.end());
  return out;
}

KdTree::Nearest KdTree::nearest(PointView query) const {
  if (query.size() != points_.dim()) throw ConfigError("nearest-point query dimension mismatch");
  std::size_t best_index = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  std::uint32_t stack[128];
  std::size_t top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const std::uint32_t id = stack[--top];
    if (box_squared_distance(id, query) > best_d2) continue;
    const Node& node = nodes_[id];
    if (node.is_leaf()) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        const std::size_t idx = perm_[i];
        const double d2 = squared_distance(points_[idx], query);
        if (d2 < best_d2 || (d2 == best_d2 && idx < best_index)) {
          best_d2 = d2;
          best_index = idx;
        }
      }
    } else {
      // Visit the nearer child first.
      const bool go_left = query[node.axis] <= node.split;
      stack[top++] = go_left ? node.right : node.left;
      stack[top++] = go_left ? node.left : node.right;
    }
  }
  return {best_index, std::sqrt(best_d2)};
}

}  // namespace pum
