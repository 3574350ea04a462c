#include <doctest.h>

#include "atk/atiyah_class.hpp"
#include "atk/fixtures.hpp"
#include "atk/random.hpp"

using namespace atk;

TEST_CASE("trivial coefficients over an abelian algebra: d = 0") {
  const Representation rep = Representation::trivial(LieAlgebra::abelian(3), 2);
  const CEComplex complex(rep);
  for (std::size_t k = 0; k <= 2; ++k) CHECK(complex.differential(k).is_zero());
  // H^k = Λ^k A* ⊗ V
  CHECK(complex.cohomology_dim(0) == 2);
  CHECK(complex.cohomology_dim(1) == 6);
  CHECK(complex.cohomology_dim(2) == 6);
}

TEST_CASE("one-dimensional algebra acting by a scalar") {
  auto build = [](long lambda) {
    Matrix m(1, 1);
    m.at(0, 0) = Rational(lambda);
    return CEComplex(Representation(LieAlgebra::abelian(1), 1, {m}));
  };
  const CEComplex zero = build(0);
  CHECK(zero.cohomology_dim(0) == 1);
  CHECK(zero.cohomology_dim(1) == 1);
  const CEComplex unit = build(1);
  CHECK(unit.differential(0) == Matrix::from_rows({{1}}));
  CHECK(unit.cohomology_dim(0) == 0);
  CHECK(unit.cohomology_dim(1) == 0);
}

TEST_CASE("d∘d = 0 on the Atiyah coefficient module of sl2/Borel") {
  const Triad triad = fixtures::sl2_borel_standard();
  const Representation coeff = coefficient_module(triad);
  CHECK(coeff.flatness_violation() == std::nullopt);
  const CEComplex complex(coeff);
  CHECK((complex.differential(1) * complex.differential(0)).is_zero());
  CHECK((complex.differential(2) * complex.differential(1)).is_zero());
  // dims double-checked by rank-nullity
  for (std::size_t k = 0; k <= 2; ++k) {
    const std::size_t kernel = complex.cochain_dim(k) - rank(complex.differential(k));
    const std::size_t image = (k == 0) ? 0 : rank(complex.differential(k - 1));
    CHECK(complex.cohomology_dim(k) == kernel - image);
  }
}

TEST_CASE("adjoint-module complex also closes") {
  const Triad triad = fixtures::sl2_borel_adjoint();
  CHECK_NOTHROW(CEComplex(coefficient_module(triad)));
}

TEST_CASE("cocycle membership and witnesses") {
  const Triad triad = fixtures::sl2_borel_standard();
  const CEComplex complex(coefficient_module(triad));
  const Connection canonical = extend_connection(triad, {Matrix::zero(2, 2)});
  const Matrix omega = cocycle_cochain(atiyah_cocycle(triad, canonical));
  CHECK(complex.is_cocycle(1, omega));
  const AffineSolutionSet witness = complex.coboundary_witness(1, omega);
  REQUIRE_FALSE(witness.empty);
  CHECK(complex.differential(0) * witness.particular == omega);
}

TEST_CASE("atiyah class of the scalar family") {
  SUBCASE("lambda = 1: obstructed with h1 = 1") {
    const AtiyahClassResult result = atiyah_class(fixtures::scalar_triad(Rational(1)));
    CHECK_FALSE(result.vanishes);
    CHECK(result.h1_dim == 1);
    CHECK(result.cocycle.at(0, 0) == Matrix::from_rows({{1}}));
  }
  SUBCASE("lambda = 0: vanishes with zero witness") {
    const AtiyahClassResult result = atiyah_class(fixtures::scalar_triad(Rational(0)));
    CHECK(result.vanishes);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->is_zero());
  }
}

TEST_CASE("atiyah class of sl2/Borel with the standard module vanishes") {
  const Triad triad = fixtures::sl2_borel_standard();
  const AtiyahClassResult result = atiyah_class(triad);
  CHECK(result.vanishes);
  REQUIRE(result.witness.has_value());
  // the witness yields a compatible connection
  const Connection fixed = compatible_from_witness(triad, *result.witness);
  CHECK(is_a_compatible(triad, fixed));
}

TEST_CASE("connection shift check") {
  const Triad triad = fixtures::sl2_borel_standard();
  Rng rng(53);
  SUBCASE("equal connections give zero on both sides") {
    const Connection conn = extend_connection(triad, rng.square_matrices(1, 2));
    const ShiftCheckReport report = connection_shift_check(triad, conn, conn);
    CHECK(report.ok);
    CHECK(report.lhs.is_zero());
  }
  SUBCASE("scalar example: both sides vanish") {
    const Triad scalar = fixtures::scalar_triad(Rational(1));
    Matrix m1(1, 1), m2(1, 1);
    m1.at(0, 0) = Rational(2);
    m2.at(0, 0) = Rational(-5, 3);
    const ShiftCheckReport report = connection_shift_check(
        scalar, extend_connection(scalar, {m1}), extend_connection(scalar, {m2}));
    CHECK(report.ok);
    CHECK(report.lhs.is_zero());
  }
  SUBCASE("random pairs on sl2/Borel") {
    for (int t = 0; t < 10; ++t) {
      const Connection a = extend_connection(triad, rng.square_matrices(1, 2));
      const Connection b = extend_connection(triad, rng.square_matrices(1, 2));
      CHECK(connection_shift_check(triad, a, b).ok);
    }
  }
}

TEST_CASE("compatible connection solver") {
  SUBCASE("A = L: trivially compatible, empty unknown") {
    LiePair pair(fixtures::sl2(), Matrix::identity(3));
    Representation rep(pair.sub(), 2,
                       {fixtures::sl2_standard(0), fixtures::sl2_standard(1),
                        fixtures::sl2_standard(2)});
    const Triad triad(std::move(pair), std::move(rep));
    const AffineSolutionSet sol = compatible_connection_solve(triad);
    CHECK_FALSE(sol.empty);
    CHECK(sol.dim() == 0);
    CHECK(sol.particular.rows() == 0);
  }
  SUBCASE("scalar family: empty iff lambda != 0") {
    CHECK(compatible_connection_solve(fixtures::scalar_triad(Rational(1))).empty);
    const AffineSolutionSet sol =
        compatible_connection_solve(fixtures::scalar_triad(Rational(0)));
    CHECK_FALSE(sol.empty);
    // homogeneous dimension equals dim H^0 of the coefficient module
    const CEComplex complex(coefficient_module(fixtures::scalar_triad(Rational(0))));
    CHECK(sol.dim() == complex.cohomology_dim(0));
  }
  SUBCASE("sl2/Borel standard: contains rho(f), all solutions compatible") {
    const Triad triad = fixtures::sl2_borel_standard();
    const AffineSolutionSet sol = compatible_connection_solve(triad);
    REQUIRE_FALSE(sol.empty);
    CHECK(sol.contains(zero_cochain({fixtures::sl2_standard(2)})));
    CHECK(sol.dim() == CEComplex(coefficient_module(triad)).cohomology_dim(0));
    // every returned solution passes is_a_compatible
    const auto check_solution = [&](const Matrix& x) {
      const Connection conn = extend_connection(triad, assignment_from_vector(triad, x));
      CHECK(is_a_compatible(triad, conn));
    };
    check_solution(sol.particular);
    for (std::size_t j = 0; j < sol.dim(); ++j)
      check_solution(sol.particular + sol.homogeneous.basis().col(j));
  }
  SUBCASE("solver emptiness matches the class") {
    for (long lambda = -2; lambda <= 2; ++lambda) {
      const Triad triad = fixtures::scalar_triad(Rational(lambda));
      CHECK(compatible_connection_solve(triad).empty == !atiyah_class(triad).vanishes);
    }
  }
}
