#include <doctest.h>

#include "atk/extension.hpp"
#include "atk/fixtures.hpp"
#include "atk/random.hpp"

using namespace atk;

namespace {

Triad degenerate_all() {
  LiePair pair(fixtures::sl2(), Matrix::identity(3));
  Representation rep(pair.sub(), 2,
                     {fixtures::sl2_standard(0), fixtures::sl2_standard(1),
                      fixtures::sl2_standard(2)});
  return Triad(std::move(pair), std::move(rep));
}

Triad degenerate_none() {
  LiePair pair(fixtures::sl2(), Matrix(3, 0));
  return Triad(std::move(pair), Representation(LieAlgebra::abelian(0), 2, {}));
}

}  // namespace

TEST_CASE("quotient extension dimensions and degenerate cases") {
  SUBCASE("A = L: carrier is End(E) with the commutator action") {
    const Triad triad = degenerate_all();
    const QuotientExtension q = build_quotient_extension(triad);
    CHECK(q.bott.module_dim() == 4);
    // action of a on the class of (δ,0) is [∇̄_a, δ]
    const Matrix delta = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix cls = q.chart.projection * vstack(vec(delta), Matrix::zero(3, 1));
    const Matrix expected =
        q.chart.projection *
        vstack(vec(commutator(fixtures::sl2_standard(0), delta)), Matrix::zero(3, 1));
    CHECK(q.bott.action()[0] * cls == expected);
  }
  SUBCASE("A = 0: carrier is gl(E)×L with no action") {
    const Triad triad = degenerate_none();
    const QuotientExtension q = build_quotient_extension(triad);
    CHECK(q.bott.module_dim() == 4 + 3);
    CHECK(q.bott.action().empty());
  }
  SUBCASE("sl2/Borel: dimension 4 + 1") {
    const QuotientExtension q = build_quotient_extension(fixtures::sl2_borel_standard());
    CHECK(q.bott.module_dim() == 5);
  }
}

TEST_CASE("embedded extension over abelian data acts by zero") {
  const LieAlgebra three = LieAlgebra::abelian(3);
  LiePair pair(three, Matrix::from_rows({{1}, {0}, {0}}));
  const Triad triad(pair, Representation::trivial(pair.sub(), 2));
  const EmbeddedExtension em = build_embedded_extension(triad);
  for (const Matrix& m : em.bott.action()) CHECK(m.is_zero());
}

TEST_CASE("embedded extension: the eth correction appears") {
  const Triad triad = fixtures::sl2_borel_standard();
  const EmbeddedExtension em = build_embedded_extension(triad);
  // action of e on (0, fbar): End component is ∇̄_{eth_fbar e} = ∇̄_{-h} = -rho(h)
  Matrix v(5, 1);
  v.at(4, 0) = Rational(1);  // (0 ⊕ fbar)
  const Matrix moved = em.bott.action()[1] * v;
  const Matrix expected = vec(-fixtures::sl2_standard(0));
  for (std::size_t u = 0; u < 4; ++u) CHECK(moved.at(u, 0) == expected.at(u, 0));
  CHECK(moved.at(4, 0).is_zero());  // D_e fbar = 0
}

TEST_CASE("split extension twist is the cocycle") {
  const Triad triad = fixtures::scalar_triad(Rational(1));
  Matrix mu(1, 1);
  mu.at(0, 0) = Rational(4);
  const Connection conn = extend_connection(triad, {mu});
  const SplitExtension sp = build_split_extension(triad, conn);
  // with E = Q^1: carrier (φ, b); the action of y on (0 ⊕ xbar) has End
  // component R(y ⊗ xbar) = lambda = 1
  Matrix v(2, 1);
  v.at(1, 0) = Rational(1);
  const Matrix moved = sp.bott.action()[0] * v;
  CHECK(moved.at(0, 0) == Rational(1));
}

TEST_CASE("compatible connections make the split action block-diagonal") {
  const Triad triad = fixtures::sl2_borel_standard();
  const Connection conn = extend_connection(triad, {fixtures::sl2_standard(2)});
  const SplitExtension sp = build_split_extension(triad, conn);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t r = 0; r < 4; ++r) CHECK(sp.bott.action()[i].at(r, 4).is_zero());
}

TEST_CASE("the three models are exactly isomorphic") {
  Rng rng(59);
  const Triad triads[] = {fixtures::sl2_borel_standard(), fixtures::sl2_borel_adjoint(),
                          fixtures::scalar_triad(Rational(1)),
                          fixtures::heisenberg_center(rng.matrix(2, 2))};
  for (const Triad& triad : triads) {
    CHECK_NOTHROW(iso_quotient_embedded(triad));
    const std::size_t n = triad.module_dim();
    for (int t = 0; t < 3; ++t) {
      const Connection conn =
          extend_connection(triad, rng.square_matrices(triad.pair.quotient_dim(), n));
      CHECK_NOTHROW(iso_embedded_split(triad, conn));
    }
  }
}

TEST_CASE("isomorphisms in the degenerate cases are identities") {
  SUBCASE("A = L") {
    const Triad triad = degenerate_all();
    const Intertwiner iso = iso_quotient_embedded(triad);
    CHECK(iso.forward * iso.backward == Matrix::identity(4));
    const Connection conn = extend_connection(triad, {});
    const Intertwiner es = iso_embedded_split(triad, conn);
    CHECK(es.forward == Matrix::identity(4));
  }
  SUBCASE("A = 0") {
    const Triad triad = degenerate_none();
    CHECK_NOTHROW(iso_quotient_embedded(triad));
  }
}

TEST_CASE("change of splitting intertwines the two embedded models") {
  Rng rng(61);
  const Triad triad = fixtures::sl2_borel_standard();
  SUBCASE("identity difference") {
    const Intertwiner iso = iso_change_splitting(triad, triad.pair.i_b());
    CHECK(iso.forward == Matrix::identity(5));
  }
  SUBCASE("i'_B(fbar) = f + h") {
    CHECK_NOTHROW(iso_change_splitting(triad, Matrix::from_rows({{1}, {0}, {1}})));
  }
  SUBCASE("random differences") {
    for (int t = 0; t < 5; ++t) {
      const Matrix alt = triad.pair.i_b() + triad.pair.inclusion_a() * rng.matrix(2, 1);
      CHECK_NOTHROW(iso_change_splitting(triad, alt));
    }
  }
  SUBCASE("B = 0: identity on End(E)") {
    const Triad all = degenerate_all();
    const Intertwiner iso = iso_change_splitting(all, all.pair.i_b());
    CHECK(iso.forward == Matrix::identity(4));
    const Connection conn = extend_connection(all, {});
    CHECK(iso_change_connection(all, conn, conn).forward == Matrix::identity(4));
  }
}

TEST_CASE("change of connection intertwines the two split models") {
  Rng rng(67);
  const Triad triad = fixtures::sl2_borel_standard();
  const Connection a = extend_connection(triad, rng.square_matrices(1, 2));
  SUBCASE("same connection: identity") {
    const Intertwiner iso = iso_change_connection(triad, a, a);
    CHECK(iso.forward == Matrix::identity(5));
  }
  SUBCASE("scalar example with different mu") {
    const Triad scalar = fixtures::scalar_triad(Rational(1));
    Matrix m1(1, 1), m2(1, 1);
    m1.at(0, 0) = Rational(3);
    m2.at(0, 0) = Rational(-1, 2);
    CHECK_NOTHROW(iso_change_connection(scalar, extend_connection(scalar, {m1}),
                                        extend_connection(scalar, {m2})));
  }
  SUBCASE("random pairs") {
    for (int t = 0; t < 5; ++t) {
      const Connection b = extend_connection(triad, rng.square_matrices(1, 2));
      CHECK_NOTHROW(iso_change_connection(triad, a, b));
    }
  }
}

TEST_CASE("B-connections correspond to extending connections") {
  Rng rng(71);
  const Triad triad = fixtures::sl2_borel_standard();
  const RoundtripReport report =
      b_connection_roundtrip(triad, {{rng.matrix(2, 2)}, {fixtures::sl2_standard(2)}});
  CHECK(report.ok);
  CHECK(report.dimension_split_ok);
  CHECK(report.instances_checked == 1 + 4 + 2);

  CHECK(b_connection_roundtrip(degenerate_all()).ok);
  CHECK(b_connection_roundtrip(degenerate_none()).ok);
}

TEST_CASE("the four compatibility flags agree") {
  Rng rng(73);
  const Triad triad = fixtures::sl2_borel_standard();
  const CompatibilityCheck good =
      a_compatibility_flags(triad, extend_connection(triad, {fixtures::sl2_standard(2)}));
  CHECK(good.compatible);
  int compatible = 0, incompatible = 0;
  for (int t = 0; t < 12; ++t) {
    const CompatibilityCheck c =
        a_compatibility_flags(triad, extend_connection(triad, rng.square_matrices(1, 2)));
    (c.compatible ? compatible : incompatible) += 1;
  }
  CHECK(compatible + incompatible == 12);
  CHECK(incompatible > 0);  // random assignments are almost never compatible
}

TEST_CASE("hexagon diagnostics") {
  Rng rng(79);
  SUBCASE("A = L") {
    const Triad triad = degenerate_all();
    const HexagonReport report = hexagon_diagnostics(triad, extend_connection(triad, {}));
    CHECK(report.ok());
  }
  SUBCASE("A = 0") {
    const Triad triad = degenerate_none();
    const Connection conn = extend_connection(triad, rng.square_matrices(3, 2));
    CHECK(hexagon_diagnostics(triad, conn).ok());
  }
  SUBCASE("sl2/Borel with random connections") {
    const Triad triad = fixtures::sl2_borel_standard();
    for (int t = 0; t < 3; ++t) {
      const HexagonReport report =
          hexagon_diagnostics(triad, extend_connection(triad, rng.square_matrices(1, 2)));
      CHECK(report.ok());
      for (const auto& [name, pass] : report.checks) {
        INFO(name);
        CHECK(pass);
      }
    }
  }
}
