#include <doctest.h>

#include "atk/fixtures.hpp"
#include "atk/wang.hpp"

using namespace atk;

namespace {

Matrix span_e3() { return Matrix::from_rows({{0}, {0}, {1}}); }
Matrix borel_incl() { return Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}); }

}  // namespace

TEST_CASE("h = g: the constraint is the full answer") {
  const LieAlgebra g = fixtures::sl2();
  const LiePair pair(g, Matrix::identity(3));
  const Matrix dphi = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const WangProblem p(g, Matrix::identity(3), pair.sub(), dphi);
  const AffineSolutionSet sol = wang_solve(p);
  REQUIRE_FALSE(sol.empty);
  CHECK(sol.dim() == 0);
  CHECK(map_from_vector(p, sol.particular) == dphi);
}

TEST_CASE("rotation algebra with h = span(e3): unique solution") {
  const LieAlgebra g = fixtures::rotation3();
  const LiePair pair(g, span_e3());
  const WangProblem p(g, span_e3(), pair.sub(), Matrix::identity(1));
  const AffineSolutionSet sol = wang_solve(p);
  REQUIRE_FALSE(sol.empty);
  CHECK(sol.dim() == 0);
  // phi(e1) = phi(e2) = 0, phi(e3) = e3
  CHECK(map_from_vector(p, sol.particular) == Matrix::from_rows({{0, 0, 1}}));
}

TEST_CASE("sl2/Borel is not reductive") {
  const ReductiveResult r = reductive_test(fixtures::sl2(), borel_incl());
  CHECK_FALSE(r.reductive());
  CHECK(r.solutions.empty);
}

TEST_CASE("reductive cases come with invariant complements") {
  SUBCASE("rotation algebra") {
    const ReductiveResult r = reductive_test(fixtures::rotation3(), span_e3());
    REQUIRE(r.reductive());
    CHECK(r.complement_invariant);
    REQUIRE(r.complement.has_value());
    CHECK(r.complement->dim() == 2);
    // m = span(e1, e2)
    CHECK(r.complement->contains(Matrix::from_rows({{1}, {0}, {0}})));
    CHECK(r.complement->contains(Matrix::from_rows({{0}, {1}, {0}})));
  }
  SUBCASE("abelian algebras are always reductive") {
    const ReductiveResult r =
        reductive_test(LieAlgebra::abelian(3), Matrix::from_rows({{1}, {0}, {0}}));
    REQUIRE(r.reductive());
    CHECK(r.complement_invariant);
    // solutions differ by arbitrary maps on the complement
    CHECK(r.solutions.dim() == 2);
  }
  SUBCASE("sl2 with h = span(h) is reductive") {
    const ReductiveResult r =
        reductive_test(fixtures::sl2(), Matrix::from_rows({{1}, {0}, {0}}));
    REQUIRE(r.reductive());
    CHECK(r.complement_invariant);
  }
}

TEST_CASE("canonical connections") {
  SUBCASE("h = g: canonical equals dphi") {
    const LieAlgebra g = fixtures::rotation3();
    const LiePair pair(g, Matrix::identity(3));
    const Matrix dphi = Matrix::identity(3);
    const WangProblem p(g, Matrix::identity(3), pair.sub(), dphi);
    CHECK(canonical_connection(p, Matrix::identity(3)) == dphi);
  }
  SUBCASE("rotation algebra: canonical is the unique solution") {
    const LieAlgebra g = fixtures::rotation3();
    const LiePair pair(g, span_e3());
    const WangProblem p(g, span_e3(), pair.sub(), Matrix::identity(1));
    const ReductiveResult base = reductive_test(g, span_e3());
    REQUIRE(base.reductive());
    const Matrix phi0 = map_from_vector(
        WangProblem(g, span_e3(), pair.sub(), Matrix::identity(1)), base.solutions.particular);
    CHECK(canonical_connection(p, phi0) == Matrix::from_rows({{0, 0, 1}}));
  }
  SUBCASE("dphi = 0 gives the zero canonical connection") {
    const LieAlgebra g = fixtures::rotation3();
    const WangProblem p(g, span_e3(), LieAlgebra::abelian(1), Matrix::zero(1, 1));
    const ReductiveResult base = reductive_test(g, span_e3());
    REQUIRE(base.reductive());
    const Matrix phi0 = unvec(base.solutions.particular, 1, 3);
    CHECK(canonical_connection(p, phi0).is_zero());
    CHECK(wang_solve(p).dim() == wang_dimension_check(p).equivariant_hom_dim);
  }
  SUBCASE("rejects a non-solution phi0") {
    const LieAlgebra g = fixtures::rotation3();
    const LiePair pair(g, span_e3());
    const WangProblem p(g, span_e3(), pair.sub(), Matrix::identity(1));
    CHECK_THROWS(canonical_connection(p, Matrix::from_rows({{1, 0, 1}})));
  }
}

TEST_CASE("wang dimension check") {
  SUBCASE("h = g: both sides zero") {
    const LieAlgebra g = fixtures::rotation3();
    const LiePair pair(g, Matrix::identity(3));
    const WangProblem p(g, Matrix::identity(3), pair.sub(), Matrix::identity(3));
    const WangDimensionReport report = wang_dimension_check(p);
    CHECK(report.ok());
    CHECK(report.wang_dim == 0);
    CHECK(report.equivariant_hom_dim == 0);
    CHECK(report.connected_isotropy_assumption);
  }
  SUBCASE("rotation algebra problem") {
    const LieAlgebra g = fixtures::rotation3();
    const LiePair pair(g, span_e3());
    const WangProblem p(g, span_e3(), pair.sub(), Matrix::identity(1));
    const WangDimensionReport report = wang_dimension_check(p);
    CHECK(report.ok());
    CHECK(report.wang_dim == 0);
  }
  SUBCASE("dphi = 0 on an abelian target") {
    // g abelian 2-dim, h = span(e1), k = Q: dimension 1 on both sides
    const LieAlgebra g = LieAlgebra::abelian(2);
    const Matrix incl = Matrix::from_rows({{1}, {0}});
    const WangProblem p(g, incl, LieAlgebra::abelian(1), Matrix::zero(1, 1));
    const WangDimensionReport report = wang_dimension_check(p);
    CHECK(report.ok());
    CHECK(report.wang_dim == 1);
  }
  SUBCASE("dphi = 0 on the rotation problem kills everything") {
    const LieAlgebra g = fixtures::rotation3();
    const WangProblem p(g, span_e3(), LieAlgebra::abelian(1), Matrix::zero(1, 1));
    const WangDimensionReport report = wang_dimension_check(p);
    CHECK(report.ok());
    CHECK(report.wang_dim == 0);
  }
  SUBCASE("non-reductive base is reported, not an error") {
    const LieAlgebra g = fixtures::sl2();
    const LiePair pair(g, borel_incl());
    const WangProblem p(g, borel_incl(), pair.sub(), Matrix::identity(2));
    const WangDimensionReport report = wang_dimension_check(p);
    CHECK_FALSE(report.base_reductive);
    CHECK_FALSE(report.ok());
  }
}

TEST_CASE("invalid problems are rejected") {
  // dphi must be a morphism: the Borel is nonabelian, so the swap map fails
  const LieAlgebra g = fixtures::sl2();
  CHECK_THROWS_WITH_AS(
      WangProblem(g, borel_incl(), LiePair(g, borel_incl()).sub(),
                  Matrix::from_rows({{0, 1}, {1, 0}})),
      doctest::Contains("morphism"), std::invalid_argument);
}

TEST_CASE("solutions satisfy both constraint families") {
  const LieAlgebra g = fixtures::rotation3();
  const LiePair pair(g, span_e3());
  const WangProblem p(g, span_e3(), pair.sub(), Matrix::identity(1));
  const AffineSolutionSet sol = wang_solve(p);
  REQUIRE_FALSE(sol.empty);
  const Matrix phi = map_from_vector(p, sol.particular);
  CHECK(phi * p.inclusion_h() == p.dphi());
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix ei(3, 1);
    ei.at(i, 0) = Rational(1);
    const Matrix lhs = phi * g.bracket(span_e3(), ei);
    const Matrix rhs = p.k().bracket(p.dphi().col(0), phi * ei);
    CHECK(lhs == rhs);
  }
}
