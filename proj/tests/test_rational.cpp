#include <doctest.h>

#include <stdexcept>

#include "mirrorcat/rational.hpp"

using mirrorcat::Rational;

TEST_CASE("construction reduces and normalizes the sign") {
  CHECK(Rational(6, 32) == Rational(3, 16));
  CHECK(Rational(-3, -16) == Rational(3, 16));
  CHECK(Rational(3, -16) == Rational(-3, 16));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(8, 16).num() == 1);
  CHECK(Rational(8, 16).den() == 2);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(3, 16) + Rational(1, 16) == Rational(1, 4));
  CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(5, 6) / Rational(5, 3) == Rational(1, 2));
  CHECK(-Rational(1, 4) == Rational(-1, 4));
}

TEST_CASE("ordering and integrality") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_nonnegative());
  CHECK_FALSE(Rational(-1, 5).is_nonnegative());
}

TEST_CASE("parse and canonical text") {
  CHECK(Rational::parse("3/16") == Rational(3, 16));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational(3, 16).str() == "3/16");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("mod_one") {
  CHECK(Rational(5, 4).mod_one() == Rational(1, 4));
  CHECK(Rational(-1, 4).mod_one() == Rational(3, 4));
  CHECK(Rational(3).mod_one() == Rational(0));
}

TEST_CASE("overflow throws instead of wrapping") {
  Rational huge(9223372036854775807LL);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  CHECK_THROWS_AS(huge + Rational(1, 2), std::overflow_error);
}
