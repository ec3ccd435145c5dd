#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pum {

// Invalid input or configuration: unknown shape, dimension mismatch, bad flag.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric step could not be completed (e.g. a local system is not SPD).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the Cholesky factorization; `pivot` is the zero-based row at
// which a nonpositive pivot was met.
class FactorizationError : public NumericError {
 public:
  FactorizationError(std::size_t pivot, const std::string& what)
      : NumericError(what), pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pum
