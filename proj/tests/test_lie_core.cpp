#include <doctest.h>

#include <array>
#include <thread>

#include "atk/fixtures.hpp"
#include "atk/lie_pair.hpp"
#include "atk/random.hpp"

using namespace atk;

namespace {

Matrix e(std::size_t dim, std::size_t i) {
  Matrix v(dim, 1);
  v.at(i, 0) = Rational(1);
  return v;
}

}  // namespace

TEST_CASE("validation accepts the classics and rejects junk") {
  CHECK(LieAlgebra::abelian(4).validate().ok());
  CHECK(fixtures::sl2().validate().ok());
  CHECK(fixtures::heisenberg().validate().ok());
  CHECK(fixtures::rotation3().validate().ok());

  // c(1,2) != -c(2,1), built without the automatic completion
  LieAlgebra bad(2);
  bad.c(0, 1, 0) = Rational(1);
  const LieValidationReport report = bad.validate();
  CHECK_FALSE(report.ok());
  REQUIRE(report.antisymmetry_violations.size() == 1);
  CHECK(report.antisymmetry_violations[0] == std::pair<std::size_t, std::size_t>{0, 1});

  // antisymmetric but non-Jacobi
  LieAlgebra nj = LieAlgebra::from_entries(3, {{0, 1, 0, Rational(1)},
                                               {1, 2, 1, Rational(1)},
                                               {0, 2, 2, Rational(1)}});
  CHECK(nj.validate().antisymmetry_violations.empty());
  CHECK_FALSE(nj.validate().jacobi_violations.empty());
}

TEST_CASE("pair construction: Borel closes, span(e,f) does not") {
  const LiePair pair = fixtures::sl2_borel_pair();
  CHECK(pair.sub_dim() == 2);
  CHECK(pair.quotient_dim() == 1);
  // induced structure on A: [h,e] = 2e
  CHECK(pair.sub().bracket(e(2, 0), e(2, 1)) == e(2, 1) * Rational(2));

  CHECK_THROWS_WITH_AS(LiePair(fixtures::sl2(), Matrix::from_rows({{0, 0}, {1, 0}, {0, 1}})),
                       doctest::Contains("not closed"), std::invalid_argument);
  CHECK_THROWS_AS(LiePair(fixtures::sl2(), Matrix::from_rows({{1, 2}, {2, 4}, {0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("degenerate pairs") {
  const LiePair all(fixtures::sl2(), Matrix::identity(3));
  CHECK(all.quotient_dim() == 0);
  CHECK(all.bott().algebra().dim() == 3);
  CHECK(all.bott().module_dim() == 0);

  const LiePair none(fixtures::sl2(), Matrix(3, 0));
  CHECK(none.quotient_dim() == 3);
  CHECK(none.sub_dim() == 0);
}

TEST_CASE("Bott action of the Borel on sl2/Borel") {
  const LiePair pair = fixtures::sl2_borel_pair();
  const Representation bott = pair.bott();
  // D_h fbar = -2 fbar, D_e fbar = 0
  CHECK(bott.action()[0] == Matrix::from_rows({{-2}}));
  CHECK(bott.action()[1] == Matrix::from_rows({{0}}));
}

TEST_CASE("Bott action is zero for abelian ambient algebras") {
  const LiePair pair(LieAlgebra::abelian(4), Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  const Representation bott = pair.bott();
  for (const Matrix& m : bott.action()) CHECK(m.is_zero());
  for (std::size_t j = 0; j < 2; ++j) CHECK(pair.eth_matrix(j).is_zero());
  CHECK(pair.bracket_decomposition_check().ok());  // both sides vanish
}

TEST_CASE("eth on sl2/Borel") {
  const LiePair pair = fixtures::sl2_borel_pair();
  // eth_fbar h = pr_A([f,h]) = pr_A(2f) = 0
  CHECK(pair.eth(e(1, 0), e(2, 0)).is_zero());
  // eth_fbar e = pr_A([f,e]) = pr_A(-h) = -h
  CHECK(pair.eth(e(1, 0), e(2, 1)) == -e(2, 0));
}

TEST_CASE("bracket decomposition identity") {
  CHECK(fixtures::sl2_borel_pair().bracket_decomposition_check().ok());
  const LiePair degenerate(fixtures::sl2(), Matrix::identity(3));
  CHECK(degenerate.bracket_decomposition_check().ok());

  // spot check the (e, fbar) instance: [e,f] = h while D_e fbar = 0 and
  // eth_fbar e = -h, so the difference of embeddings is h
  const LiePair pair = fixtures::sl2_borel_pair();
  const Matrix lhs = pair.ambient().bracket(e(3, 1), e(3, 2));
  CHECK(lhs == e(3, 0));
}

TEST_CASE("bracket decomposition on random pairs") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    // subalgebras of sl2 of dimension 1 are always closed
    Matrix incl(3, 1);
    do {
      incl = rng.matrix(3, 1);
    } while (incl.is_zero());
    const LiePair pair(fixtures::sl2(), incl);
    CHECK(pair.bott().flatness_violation() == std::nullopt);
    CHECK(pair.bracket_decomposition_check().ok());
  }
}

TEST_CASE("splitting difference") {
  const LiePair pair = fixtures::sl2_borel_pair();
  SUBCASE("identity splitting gives zero") {
    CHECK(pair.splitting_difference(pair.i_b()).is_zero());
  }
  SUBCASE("i'_B(fbar) = f + h gives I(fbar) = h") {
    const Matrix alt = Matrix::from_rows({{1}, {0}, {1}});
    CHECK(pair.splitting_difference(alt) == Matrix::from_rows({{1}, {0}}));
  }
  SUBCASE("difference built from a given J is recovered") {
    Rng rng(19);
    for (int t = 0; t < 5; ++t) {
      const Matrix j = rng.matrix(2, 1);
      const Matrix alt = pair.i_b() + pair.inclusion_a() * j;
      CHECK(pair.splitting_difference(alt) == j);
      // pr_B kills the difference
      CHECK((pair.pr_b() * (alt - pair.i_b())).is_zero());
    }
  }
  SUBCASE("non-splittings are rejected") {
    CHECK_THROWS(pair.splitting_difference(Matrix::from_rows({{1}, {0}, {0}})));
  }
}

TEST_CASE("with_splitting keeps the Bott action and the induced structure") {
  const LiePair pair = fixtures::sl2_borel_pair();
  const Matrix alt = Matrix::from_rows({{-2}, {3}, {1}});
  const LiePair moved = pair.with_splitting(alt);
  CHECK(moved.sub() == pair.sub());
  const Representation orig_bott = pair.bott();
  const Representation moved_bott = moved.bott();
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(moved_bott.action()[i] == orig_bott.action()[i]);
  CHECK(moved.bracket_decomposition_check().ok());
}

TEST_CASE("shared immutable values are usable from several threads") {
  const LiePair pair = fixtures::sl2_borel_pair();
  std::vector<std::thread> workers;
  std::array<bool, 4> ok{};
  for (std::size_t w = 0; w < ok.size(); ++w)
    workers.emplace_back([&pair, &ok, w] {
      bool good = true;
      for (int t = 0; t < 50; ++t) {
        const Representation bott = pair.bott();
        good = good && bott.action()[0] == Matrix::from_rows({{-2}});
        good = good && pair.bracket_decomposition_check().ok();
      }
      ok[w] = good;
    });
  for (auto& worker : workers) worker.join();
  for (bool good : ok) CHECK(good);
}

TEST_CASE("the two splittings assemble the identity on L") {
  for (const LiePair& pair :
       {fixtures::sl2_borel_pair(),
        fixtures::sl2_borel_pair().with_splitting(Matrix::from_rows({{1}, {0}, {1}}))}) {
    const Matrix assembled =
        pair.inclusion_a() * pair.pr_a() + pair.i_b() * pair.pr_b();
    CHECK(assembled == Matrix::identity(3));
  }
}
