#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pum/point_set.hpp"

namespace pum {

// Containment slack applied to every constraint, box faces included.
inline constexpr double kContainmentTolerance = 1e-12;

/// The closed halfspace { x : normal . x <= offset } with a unit normal.
class Halfspace {
 public:
  // Rescales (normal, offset) so the normal has unit length. Throws
  // ConfigError for a zero or non-finite normal.
  Halfspace(std::vector<double> normal, double offset);

  const std::vector<double>& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }

  // offset - normal . p; nonnegative inside, equals the Euclidean distance
  // to the bounding hyperplane.
  double slack(PointView p) const noexcept;

 private:
  std::vector<double> normal_;
  double offset_;
};

/// Bounded convex region: the unit box [0,1]^N intersected with a list of
/// halfspaces. The box is implicit, so `halfspaces()` holds only the
/// shape's own faces and the cube has none.
class ConvexDomain {
 public:
  ConvexDomain(std::size_t dim, std::vector<Halfspace> halfspaces, std::string label);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  const std::string& label() const noexcept { return label_; }

  // Throws ConfigError on dimension mismatch.
  bool contains(PointView p) const;

  // Distance from an interior point to the nearest face (box faces included).
  // Negative outside.
  double boundary_distance(PointView p) const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  std::string label_;
};

/// Builtin shapes: triangle, disk, hexagon (dim 2); pyramid, cylinder,
/// hexprism (dim 3); cube (any dim >= 1). Throws ConfigError otherwise.
ConvexDomain make_domain(std::string_view label, std::size_t dim);

// Number of polygon sides used for the disk and the cylinder cross-section.
inline constexpr std::size_t kDiskSides = 128;

/// Reads a custom domain. Format: a header line "N H" followed by H lines
/// "n_1 ... n_N offset". Blank lines and lines starting with '#' are
/// skipped. Errors name the offending line number.
ConvexDomain parse_domain(std::istream& in, std::string label = "hull");
ConvexDomain read_domain_file(const std::filesystem::path& path);

struct FilterResult {
  PointSet kept;
  std::vector<std::size_t> indices;  // positions of kept points in the input
  double fraction = 0.0;             // |kept| / |input|, 0 for empty input
};

FilterResult filter_points(const ConvexDomain& domain, const PointSet& pts);

/// m^N tensor grid of cell centers (2i - 1) / (2m), i = 1..m, with the
/// first axis varying slowest. Throws ConfigError when m == 0 or m^N > 1e8.
PointSet grid_points(std::size_t dim, std::size_t per_axis);

}  // namespace pum
