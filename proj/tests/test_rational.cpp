#include <doctest.h>

#include <sstream>

#include "halfdom/rational.hpp"

using halfdom::Rational;

TEST_CASE("lowest terms and formatting") {
  CHECK(Rational(6, 8).str() == "3/4");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(0, 7).str() == "0/1");
  std::ostringstream os;
  os << Rational(70, 121);
  CHECK(os.str() == "70/121");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("27/49") == Rational(27, 49));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("7") == 7);
  CHECK(Rational::parse("+1/2") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic and ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(5, 9) < Rational(9, 16));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(4).is_integer());
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}
