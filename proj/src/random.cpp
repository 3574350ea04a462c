#include "atk/random.hpp"

namespace atk {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::small_rational() {
  const long num = uniform(-3, 3);
  const long den = uniform(1, 2);
  return Rational(num, den);
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = small_rational();
  return m;
}

std::vector<Matrix> Rng::square_matrices(std::size_t count, std::size_t n) {
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) out.push_back(matrix(n, n));
  return out;
}

}  // namespace atk
