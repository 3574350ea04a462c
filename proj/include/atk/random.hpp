#pragma once

#include "atk/matrix.hpp"

#include <cstdint>
#include <vector>

namespace atk {

/// Deterministic pseudo-random source (splitmix64). Identical seeds produce
/// identical streams on every platform; no standard-library distributions
/// are involved, so outputs are reproducible byte for byte.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi);
  /// Numerator uniform in [-3, 3], denominator in {1, 2}.
  Rational small_rational();
  Matrix matrix(std::size_t rows, std::size_t cols);
  std::vector<Matrix> square_matrices(std::size_t count, std::size_t n);

private:
  std::uint64_t state_;
};

}  // namespace atk
