#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "pum/point_set.hpp"

namespace pum {

// Bases for coordinates 1..6.
inline constexpr std::array<unsigned, 6> kHaltonPrimes = {2, 3, 5, 7, 11, 13};
inline constexpr std::size_t kHaltonMaxDim = kHaltonPrimes.size();

/// Van der Corput radical inverse: the base-`base` digits of `index`
/// mirrored about the radix point. Digits are accumulated as an integer
/// numerator over base^k and divided once at the end.
double radical_inverse(std::uint64_t index, unsigned base);

struct HaltonConfig {
  std::size_t dim = 2;
  std::uint64_t start_index = 1;  // index 0 (the origin) is skipped
};

/// `count` points of the Halton sequence; point i (0-based) uses index
/// start_index + i. Throws ConfigError for dim outside 1..6 or start_index 0.
PointSet halton_points(std::size_t count, const HaltonConfig& config);

inline PointSet halton_points(std::size_t count, std::size_t dim) {
  return halton_points(count, HaltonConfig{dim, 1});
}

}  // namespace pum
