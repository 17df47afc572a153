#include <doctest.h>

#include "grautkit/rational.hpp"
#include "oracles.hpp"

using namespace grautkit;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), UsageError);
}

TEST_CASE("string round trip") {
    CHECK(Rational::from_string("3/2").str() == "3/2");
    CHECK(Rational::from_string("-6/4").str() == "-3/2");
    CHECK(Rational::from_string("7").str() == "7");
    CHECK_THROWS_AS(Rational::from_string("1/0"), UsageError);
    CHECK_THROWS_AS(Rational::from_string("a"), UsageError);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), UsageError);
    CHECK_THROWS_AS(Rational::from_string(""), UsageError);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), UsageError);
}

TEST_CASE("field operations") {
    Rational a(3, 4), b(-2, 5);
    CHECK((a + b).str() == "7/20");
    CHECK((a * b).str() == "-3/10");
    CHECK((a / b).str() == "-15/8");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().str() == "4/3");
    CHECK_THROWS_AS(Rational(0).inverse(), UsageError);
    CHECK_THROWS_AS(a / Rational(0), UsageError);
    CHECK(Rational(-2, 3).pow(3).str() == "-8/27");
    CHECK(Rational(5).pow(0).str() == "1");
}

TEST_CASE("field axioms on random values") {
    testing::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational a = testing::random_rational(rng, 20);
        Rational b = testing::random_rational(rng, 20);
        Rational c = testing::random_rational(rng, 20);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
