#include "pum/halton.hpp"

#include <string>
#include <vector>

#include "pum/error.hpp"

namespace pum {

namespace {
// 128-bit accumulators: base^k can exceed 2^64 for 64-bit indices.
__extension__ using Wide = unsigned __int128;
}  // namespace

double radical_inverse(std::uint64_t index, unsigned base) {
  if (base < 2) throw ConfigError("radical inverse base must be >= 2");
  Wide numerator = 0;
  Wide denominator = 1;
  while (index > 0) {
    numerator = numerator * base + index % base;
    denominator *= base;
    index /= base;
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

PointSet halton_points(std::size_t count, const HaltonConfig& config) {
  if (config.dim == 0 || config.dim > kHaltonMaxDim) {
    throw ConfigError("Halton dimension must be in 1.." + std::to_string(kHaltonMaxDim) +
                      ", got " + std::to_string(config.dim));
  }
  if (config.start_index == 0) throw ConfigError("Halton start index must be >= 1");

  std::vector<double> coords(count * config.dim);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t index = config.start_index + i;
    for (std::size_t k = 0; k < config.dim; ++k) {
      coords[i * config.dim + k] = radical_inverse(index, kHaltonPrimes[k]);
    }
  }
  return PointSet(config.dim, std::move(coords));
}

}  // namespace pum
