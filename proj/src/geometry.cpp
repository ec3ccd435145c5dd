#include "pum/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "pum/error.hpp"

namespace pum {

Halfspace::Halfspace(std::vector<double> normal, double offset)
    : normal_(std::move(normal)), offset_(offset) {
  double norm2 = 0.0;
  for (double v : normal_) norm2 += v * v;
  const double norm = std::sqrt(norm2);
  if (!(norm > 0.0) || !std::isfinite(norm) || !std::isfinite(offset)) {
    throw ConfigError("halfspace normal must be finite and nonzero");
  }
  for (double& v : normal_) v /= norm;
  offset_ /= norm;
}

double Halfspace::slack(PointView p) const noexcept {
  double dot = 0.0;
  for (std::size_t k = 0; k < normal_.size(); ++k) dot += normal_[k] * p[k];
  return offset_ - dot;
}

ConvexDomain::ConvexDomain(std::size_t dim, std::vector<Halfspace> halfspaces, std::string label)
    : dim_(dim), halfspaces_(std::move(halfspaces)), label_(std::move(label)) {
  if (dim == 0) throw ConfigError("domain dimension must be positive");
  for (const auto& h : halfspaces_) {
    if (h.normal().size() != dim) {
      throw ConfigError("halfspace of dimension " + std::to_string(h.normal().size()) +
                        " in a domain of dimension " + std::to_string(dim));
    }
  }
}

bool ConvexDomain::contains(PointView p) const {
  if (p.size() != dim_) {
    throw ConfigError("point of dimension " + std::to_string(p.size()) +
                      " tested against a domain of dimension " + std::to_string(dim_));
  }
  for (double c : p) {
    if (c < -kContainmentTolerance || c > 1.0 + kContainmentTolerance) return false;
  }
  for (const auto& h : halfspaces_) {
    if (h.slack(p) < -kContainmentTolerance) return false;
  }
  return true;
}

double ConvexDomain::boundary_distance(PointView p) const {
  if (p.size() != dim_) throw ConfigError("dimension mismatch in boundary_distance");
  double best = std::numeric_limits<double>::infinity();
  for (double c : p) best = std::min({best, c, 1.0 - c});
  for (const auto& h : halfspaces_) best = std::min(best, h.slack(p));
  return best;
}

namespace {

// Halfspaces of a convex polygon given counter-clockwise, lifted to `dim`
// by zero-padding the normal.
std::vector<Halfspace> polygon_faces(const std::vector<std::array<double, 2>>& vertices,
                                     std::size_t dim) {
  std::vector<Halfspace> faces;
  const std::size_t count = vertices.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % count];
    // Outward normal of a CCW edge is (dy, -dx).
    std::vector<double> normal(dim, 0.0);
    normal[0] = b[1] - a[1];
    normal[1] = -(b[0] - a[0]);
    const double offset = normal[0] * a[0] + normal[1] * a[1];
    faces.emplace_back(std::move(normal), offset);
  }
  return faces;
}

// Regular polygon inscribed in the circle of radius 0.5 about (0.5, 0.5).
std::vector<Halfspace> disk_faces(std::size_t dim) {
  std::vector<Halfspace> faces;
  const double apothem = 0.5 * std::cos(std::numbers::pi / kDiskSides);
  for (std::size_t i = 0; i < kDiskSides; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / kDiskSides;
    std::vector<double> normal(dim, 0.0);
    normal[0] = std::cos(theta);
    normal[1] = std::sin(theta);
    const double offset = apothem + 0.5 * (normal[0] + normal[1]);
    faces.emplace_back(std::move(normal), offset);
  }
  return faces;
}

// Unit square with all four corners cut: legs 1/4 along x and 1/2 along y.
const std::vector<std::array<double, 2>> kHexagon = {
    {0.25, 0.0}, {0.75, 0.0}, {1.0, 0.5}, {0.75, 1.0}, {0.25, 1.0}, {0.0, 0.5}};

const std::vector<std::array<double, 2>> kTriangle = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}};

void require_dim(std::string_view label, std::size_t dim, std::size_t expected) {
  if (dim != expected) {
    throw ConfigError("shape '" + std::string(label) + "' requires dimension " +
                      std::to_string(expected) + ", got " + std::to_string(dim));
  }
}

}  // namespace

ConvexDomain make_domain(std::string_view label, std::size_t dim) {
  const std::string name(label);
  if (label == "cube") {
    if (dim == 0) throw ConfigError("cube requires a positive dimension");
    return ConvexDomain(dim, {}, name);
  }
  if (label == "triangle") {
    require_dim(label, dim, 2);
    return ConvexDomain(2, polygon_faces(kTriangle, 2), name);
  }
  if (label == "disk") {
    require_dim(label, dim, 2);
    return ConvexDomain(2, disk_faces(2), name);
  }
  if (label == "hexagon") {
    require_dim(label, dim, 2);
    return ConvexDomain(2, polygon_faces(kHexagon, 2), name);
  }
  if (label == "pyramid") {
    require_dim(label, dim, 3);
    // Base [0,1]^2 x {0}, apex (0.5, 0.5, 1); z >= 0 comes from the box.
    std::vector<Halfspace> faces;
    faces.emplace_back(std::vector<double>{-2.0, 0.0, 1.0}, 0.0);
    faces.emplace_back(std::vector<double>{0.0, -2.0, 1.0}, 0.0);
    faces.emplace_back(std::vector<double>{2.0, 0.0, 1.0}, 2.0);
    faces.emplace_back(std::vector<double>{0.0, 2.0, 1.0}, 2.0);
    return ConvexDomain(3, std::move(faces), name);
  }
  if (label == "cylinder") {
    require_dim(label, dim, 3);
    return ConvexDomain(3, disk_faces(3), name);
  }
  if (label == "hexprism") {
    require_dim(label, dim, 3);
    return ConvexDomain(3, polygon_faces(kHexagon, 3), name);
  }
  throw ConfigError("unknown shape '" + name + "'");
}

ConvexDomain parse_domain(std::istream& in, std::string label) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> ConfigError {
    return ConfigError("domain file line " + std::to_string(line_no) + ": " + msg);
  };

  if (!next_line()) throw fail("missing header \"N H\"");
  long long dim = 0;
  long long count = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> dim >> count) || (header >> extra)) throw fail("expected header \"N H\"");
  }
  if (dim < 1 || count < 0) throw fail("dimension must be >= 1 and halfspace count >= 0");

  std::vector<Halfspace> faces;
  faces.reserve(static_cast<std::size_t>(count));
  for (long long h = 0; h < count; ++h) {
    if (!next_line()) throw fail("expected " + std::to_string(count) + " halfspaces, found " +
                                 std::to_string(h));
    std::istringstream row(line);
    std::vector<double> normal(static_cast<std::size_t>(dim));
    double offset = 0.0;
    for (double& v : normal) {
      if (!(row >> v)) throw fail("expected " + std::to_string(dim + 1) + " reals");
    }
    if (!(row >> offset)) throw fail("expected " + std::to_string(dim + 1) + " reals");
    std::string extra;
    if (row >> extra) throw fail("trailing token '" + extra + "'");
    try {
      faces.emplace_back(std::move(normal), offset);
    } catch (const ConfigError& e) {
      throw fail(e.what());
    }
  }
  if (next_line()) throw fail("unexpected content after the last halfspace");
  return ConvexDomain(static_cast<std::size_t>(dim), std::move(faces), std::move(label));
}

ConvexDomain read_domain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open domain file '" + path.string() + "'");
  try {
    return parse_domain(in, "hull:" + path.string());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

FilterResult filter_points(const ConvexDomain& domain, const PointSet& pts) {
  FilterResult result{PointSet(domain.dim()), {}, 0.0};
  if (pts.empty()) return result;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (domain.contains(pts[i])) result.indices.push_back(i);
  }
  result.kept = pts.subset(result.indices);
  result.fraction = static_cast<double>(result.indices.size()) / static_cast<double>(pts.size());
  return result;
}

PointSet grid_points(std::size_t dim, std::size_t per_axis) {
  if (dim == 0) throw ConfigError("grid dimension must be positive");
  if (per_axis == 0) throw ConfigError("grid needs at least one point per axis");
  constexpr double kMaxGrid = 1e8;
  if (std::pow(static_cast<double>(per_axis), static_cast<double>(dim)) > kMaxGrid) {
    throw ConfigError("grid of " + std::to_string(per_axis) + "^" + std::to_string(dim) +
                      " points exceeds the 1e8 limit");
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= per_axis;

  std::vector<double> axis(per_axis);
  for (std::size_t i = 0; i < per_axis; ++i) {
    axis[i] = static_cast<double>(2 * i + 1) / static_cast<double>(2 * per_axis);
  }

  std::vector<double> coords(total * dim);
  std::vector<std::size_t> digit(dim, 0);
  for (std::size_t p = 0; p < total; ++p) {
    for (std::size_t k = 0; k < dim; ++k) coords[p * dim + k] = axis[digit[k]];
    // Odometer increment, last axis fastest.
    for (std::size_t k = dim; k-- > 0;) {
      if (++digit[k] < per_axis) break;
      digit[k] = 0;
    }
  }
  return PointSet(dim, std::move(coords));
}

}  // namespace pum
