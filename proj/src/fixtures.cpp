#include "atk/fixtures.hpp"

#include <stdexcept>

namespace atk {
namespace fixtures {

LieAlgebra sl2() {
  return LieAlgebra::from_entries(
      3, {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, Rational(1)}});
}

Matrix sl2_standard(std::size_t i) {
  switch (i) {
    case 0: return Matrix::from_rows({{1, 0}, {0, -1}});
    case 1: return Matrix::from_rows({{0, 1}, {0, 0}});
    case 2: return Matrix::from_rows({{0, 0}, {1, 0}});
    default: throw std::invalid_argument("sl2 basis index out of range");
  }
}

Matrix sl2_adjoint(std::size_t i) { return sl2().ad_basis(i); }

LieAlgebra solvable2() { return LieAlgebra::from_entries(2, {{0, 1, 1, Rational(1)}}); }

LieAlgebra heisenberg() { return LieAlgebra::from_entries(3, {{0, 1, 2, Rational(1)}}); }

LieAlgebra rotation3() {
  return LieAlgebra::from_entries(
      3, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {2, 0, 1, Rational(1)}});
}

LiePair sl2_borel_pair() {
  return LiePair(sl2(), Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
}

Triad sl2_borel_standard() {
  LiePair pair = sl2_borel_pair();
  Representation rep(pair.sub(), 2, {sl2_standard(0), sl2_standard(1)});
  return Triad(std::move(pair), std::move(rep));
}

Triad sl2_borel_adjoint() {
  LiePair pair = sl2_borel_pair();
  Representation rep(pair.sub(), 3, {sl2_adjoint(0), sl2_adjoint(1)});
  return Triad(std::move(pair), std::move(rep));
}

Triad scalar_triad(const Rational& lambda) {
  LiePair pair(solvable2(), Matrix::from_rows({{0}, {1}}));
  Matrix action(1, 1);
  action.at(0, 0) = lambda;
  Representation rep(pair.sub(), 1, {action});
  return Triad(std::move(pair), std::move(rep));
}

Triad heisenberg_center(const Matrix& z_action) {
  LiePair pair(heisenberg(), Matrix::from_rows({{0}, {0}, {1}}));
  Representation rep(pair.sub(), z_action.rows(), {z_action});
  return Triad(std::move(pair), std::move(rep));
}

}  // namespace fixtures
}  // namespace atk
