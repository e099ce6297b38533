#include "doctest.h"

#include <limits>

#include "support.hpp"

using namespace dwinv;

TEST_CASE("checked arithmetic throws on overflow")
{
    const Int big = std::numeric_limits<Int>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(-big - 1, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
}

TEST_CASE("gcd, lcm and floor division")
{
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(0, 7) == 7);
    CHECK(lcm(4, 6) == 12);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_mod(7, 3) == 1);
}

TEST_CASE("extended gcd and modular inverse on random inputs")
{
    testing::Rng rng(1);
    for (int t = 0; t < 200; ++t)
    {
        Int a = testing::uniform(rng, -1000, 1000), b = testing::uniform(rng, -1000, 1000);
        auto e = extended_gcd(a, b);
        CHECK(e.g == gcd(a, b));
        CHECK(e.s * a + e.t * b == e.g);
        Int m = testing::uniform(rng, 2, 500);
        if (gcd(a, m) == 1)
            CHECK(floor_mod(mod_inverse(a, m) * a, m) == 1);
        else
            CHECK_THROWS_AS(mod_inverse(a, m), std::domain_error);
    }
}

TEST_CASE("rationals stay reduced")
{
    Rational a(2, 4), b(-1, 3);
    CHECK(a == Rational(1, 2));
    CHECK((a + b) == Rational(1, 6));
    CHECK((a * b) == Rational(-1, 6));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(5, 10).str() == "1/2");
}

TEST_CASE("Q/Z representatives, order and text form")
{
    QZ a(5, 3);
    CHECK(a == QZ(2, 3));
    CHECK(a.order() == 3);
    CHECK(QZ(-1, 4) == QZ(3, 4));
    CHECK((QZ(1, 2) + QZ(1, 2)).is_zero());
    CHECK((QZ(1, 6) * 4) == QZ(2, 3));
    CHECK(QZ().str() == "0/1");
    CHECK(QZ(1, 3).str() == "1/3");
    CHECK(QZ::parse("7/6") == QZ(1, 6));
    CHECK(QZ::parse("3") == QZ());
    CHECK(QZ(1, 5) < QZ(4, 5));
    CHECK(mod_one(Rational(7, 3)) == QZ(1, 3));
}
