#include <doctest.h>

#include "atk/rational.hpp"

using atk::Rational;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  Rational sum;
  for (int i = 0; i < 3; ++i) sum += third;
  CHECK(sum == Rational(1));
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK((-Rational(3, 7)).str() == "-3/7");
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("one"));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("3/"));
}

TEST_CASE("arbitrary precision") {
  // exceeds 64 bits during the computation
  Rational big(1);
  for (int i = 0; i < 50; ++i) big *= Rational(1000000007, 3);
  Rational back = big;
  for (int i = 0; i < 50; ++i) back /= Rational(1000000007, 3);
  CHECK(back == Rational(1));
  CHECK_THROWS(Rational(1, 0));
}
