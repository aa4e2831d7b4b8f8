#include "nielsen/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace nielsen;

TEST_CASE("rationals stay reduced with positive denominator") {
    Rational r = Rational(6) / Rational(-8);
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 4);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(parse_rational("6/-8") == r);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("floor, ceil and mod 1") {
    CHECK(floor_to_integer(Rational(7, 2)) == 3);
    CHECK(floor_to_integer(Rational(-7, 2)) == -4);
    CHECK(floor_to_integer(Rational(-3)) == -3);
    CHECK(ceil_to_integer(Rational(7, 2)) == 4);
    CHECK(ceil_to_integer(Rational(-7, 2)) == -3);
    CHECK(mod_one(Rational(-1, 3)) == Rational(2, 3));
    CHECK(mod_one(Rational(5, 3)) == Rational(2, 3));
    CHECK(mod_one(Rational(2)) == 0);
    CHECK(is_integer(Rational(-4)));
    CHECK(!is_integer(Rational(-4, 3)));
}

TEST_CASE("parse and format round-trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("10") == Rational(10));
    CHECK(parse_rational("6/8") == Rational(3, 4));  // normalized on input
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(0)) == "0");

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 500);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/ 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("unit points compare by exact value") {
    CHECK(UnitPoint(Rational(5, 3)) == UnitPoint(Rational(2, 3)));
    CHECK(UnitPoint(Rational(-1, 3)) == UnitPoint(Rational(2, 3)));
    CHECK(UnitPoint(Rational(1, 3)) < UnitPoint(Rational(1, 2)));
}
