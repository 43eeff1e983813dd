#include <doctest.h>

#include "superder/rational.hpp"

using namespace superder;

TEST_CASE("parse accepts integers and fractions") {
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("-1") == Rational(-1));
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parse canonicalizes") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4/2") == Rational(2));
    const Rational r = parse_rational("-4/6");
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and division by zero throws") {
    const Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("string form is canonical") {
    CHECK(rational_str(parse_rational("2")) == "2");
    CHECK(rational_str(parse_rational("-2/4")) == "-1/2");
    CHECK(rational_str(Rational(0)) == "0");
    // big values stay exact
    Rational big(1);
    for (int i = 0; i < 40; ++i)
        big *= Rational(10);
    CHECK(rational_str(big) == "1" + std::string(40, '0'));
}
