#include <doctest.h>

#include "atk/matrix.hpp"
#include "atk/random.hpp"

using namespace atk;

TEST_CASE("kernel and image of extremes") {
  const Matrix zero = Matrix::zero(3, 3);
  CHECK(kernel_basis(zero).cols() == 3);
  CHECK(image_basis(zero).cols() == 0);
  CHECK(rank(zero) == 0);

  const Matrix id = Matrix::identity(3);
  CHECK(kernel_basis(id).cols() == 0);
  CHECK(image_basis(id).cols() == 3);
  CHECK(rank(id) == 3);
}

TEST_CASE("rank-1 kernel, row-reduced by hand") {
  // [[1,2],[2,4]] has rank 1 and kernel spanned by (2,-1)
  const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK(rank(a) == 1);
  const Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  // same line as (2,-1)
  const Matrix expected = Matrix::from_rows({{2}, {-1}});
  CHECK(rank(hstack(k, expected)) == 1);
}

TEST_CASE("rank-nullity holds on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    const std::size_t r = 1 + rng.next() % 5;
    const std::size_t c = 1 + rng.next() % 5;
    const Matrix a = rng.matrix(r, c);
    CHECK(rank(a) + kernel_basis(a).cols() == c);
    CHECK((a * kernel_basis(a)).is_zero());
    CHECK(rank(image_basis(a)) == rank(a));
  }
}

TEST_CASE("inverse") {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 5}});
  CHECK(inverse(a) * a == Matrix::identity(2));
  CHECK_THROWS(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
  CHECK(inverse(Matrix::zero(0, 0)).rows() == 0);
}

TEST_CASE("zero-size matrices behave") {
  const Matrix a(0, 3);
  CHECK(rank(a) == 0);
  CHECK(kernel_basis(a).cols() == 3);
  CHECK((a * Matrix::zero(3, 1)).rows() == 0);
  const Matrix b(3, 0);
  CHECK(rank(b) == 0);
}
