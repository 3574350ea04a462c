#include <doctest.h>

#include "atk/linalg.hpp"
#include "atk/random.hpp"

using namespace atk;

TEST_CASE("solve_affine identity, zero, unsolvable") {
  const Matrix id = Matrix::identity(2);
  const Matrix b = Matrix::from_rows({{1}, {2}});
  const AffineSolutionSet s1 = solve_affine(id, b);
  REQUIRE_FALSE(s1.empty);
  CHECK(s1.particular == b);
  CHECK(s1.dim() == 0);

  const Matrix zero = Matrix::zero(2, 2);
  const AffineSolutionSet s2 = solve_affine(zero, Matrix::zero(2, 1));
  REQUIRE_FALSE(s2.empty);
  CHECK(s2.particular.is_zero());
  CHECK(s2.dim() == 2);

  const AffineSolutionSet s3 = solve_affine(zero, Matrix::from_rows({{1}, {0}}));
  CHECK(s3.empty);
}

TEST_CASE("solvability matches the rank criterion") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng.next() % 4;
    const std::size_t c = 1 + rng.next() % 4;
    const Matrix a = rng.matrix(r, c);
    const Matrix b = rng.matrix(r, 1);
    const AffineSolutionSet s = solve_affine(a, b);
    CHECK(!s.empty == (rank(a) == rank(hstack(a, b))));
    if (!s.empty) {
      CHECK(a * s.particular == b);
      CHECK(s.contains(s.particular));
      for (std::size_t j = 0; j < s.dim(); ++j)
        CHECK(a * (s.particular + s.homogeneous.basis().col(j)) == b);
    }
  }
}

TEST_CASE("quotient chart of a coordinate subspace") {
  // ambient 2, sub = span(e1): quotient dim 1, projection (0,1), section e2
  const QuotientChart chart =
      quotient_chart(2, Subspace(2, Matrix::from_rows({{1}, {0}})));
  CHECK(chart.quotient_dim() == 1);
  CHECK(chart.projection == Matrix::from_rows({{0, 1}}));
  CHECK(chart.section == Matrix::from_rows({{0}, {1}}));
}

TEST_CASE("quotient chart of a slanted line in Q^3") {
  // invariants verified by matrix multiplication
  const Subspace sub(3, Matrix::from_rows({{1}, {1}, {0}}));
  const QuotientChart chart = quotient_chart(3, sub);
  CHECK(chart.quotient_dim() == 2);
  CHECK(chart.projection * chart.section == Matrix::identity(2));
  CHECK((chart.projection * sub.basis()).is_zero());
}

TEST_CASE("degenerate quotients") {
  const QuotientChart full = quotient_chart(3, Subspace(3, Matrix::identity(3)));
  CHECK(full.quotient_dim() == 0);
  const QuotientChart nothing = quotient_chart(3, Subspace(3, Matrix(3, 0)));
  CHECK(nothing.quotient_dim() == 3);
  CHECK(nothing.projection * nothing.section == Matrix::identity(3));
}

TEST_CASE("chart invariants on random subspaces") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng.next() % 4;
    Matrix cand = rng.matrix(n, 1 + rng.next() % n);
    const Matrix basis = image_basis(cand);  // independent columns
    const Subspace sub(n, basis);
    const QuotientChart chart = quotient_chart(n, sub);
    CHECK(chart.quotient_dim() == n - sub.dim());
    CHECK(chart.projection * chart.section == Matrix::identity(chart.quotient_dim()));
    CHECK((chart.projection * basis).is_zero());
  }
}

TEST_CASE("independence is enforced") {
  CHECK_THROWS(Subspace(2, Matrix::from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("kernel and image as subspaces") {
  const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  const Subspace k = kernel(a);
  const Subspace im = image(a);
  CHECK(k.ambient_dim() == 2);
  CHECK(k.dim() == 1);
  CHECK(k.contains(Matrix::from_rows({{2}, {-1}})));
  CHECK(im.dim() == 1);
  CHECK(im.contains(Matrix::from_rows({{1}, {2}})));
  CHECK_FALSE(im.contains(Matrix::from_rows({{1}, {0}})));
  // rank-nullity through the typed surface
  CHECK(rank(a) + kernel(a).dim() == a.cols());
}

TEST_CASE("subspace containment") {
  Rng rng(101);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = rng.matrix(3, 4);
    const Matrix b = rng.matrix(2, 3);
    // ker(A) ⊆ ker(BA) for any B
    CHECK(kernel(b * a).contains(kernel(a)));
    CHECK(image(a).contains(image(a * rng.matrix(4, 2))));
  }
}
