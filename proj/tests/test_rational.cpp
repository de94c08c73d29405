#include <stdexcept>

#include "doctest.h"

#include "momentpde/rational.hpp"

using momentpde::Rational;

TEST_CASE("parsing reduces to canonical form") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4/8") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0/5") == Rational(0));
    CHECK(Rational::parse("2/128") == Rational(1, 64));
}

TEST_CASE("parsing rejects malformed input and deep denominators") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/65"), std::invalid_argument);
    // reduction happens before the cap check, so 2/130 dies as 1/65
    CHECK_THROWS_AS(Rational::parse("2/130"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("comparisons use cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(5, 64) >= Rational(5, 64));
}

TEST_CASE("overflow is refused, not wrapped") {
    const Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("printing matches the input grammar") {
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(1, 2).to_double() == 0.5);
}
