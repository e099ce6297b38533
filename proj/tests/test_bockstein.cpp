#include "doctest.h"

#include "support.hpp"

using namespace dwinv;
using testing::Rng;

TEST_CASE("Bockstein of a character counts carries")
{
    auto g = make_cyclic(4);
    QZCochain phi = testing::cyclic_character(g, 1);
    IntCochain b = bockstein_one(phi);
    CHECK(b({3, 2}) == 1);
    CHECK(b({1, 2}) == 0);
    CHECK(b({2, 2}) == 1);
    CHECK(equal_pointwise(b, bockstein(phi)));
    CHECK(is_cocycle(b));
}

TEST_CASE("Bockstein refuses non-cocycles")
{
    auto g = make_cyclic(3);
    QZCochain c = QZCochain::dense(g, 1, {QZ(), QZ(1, 3), QZ(1, 3)});
    CHECK_THROWS_AS(bockstein(c), NotCocycleError);
    IntCochain n = IntCochain::dense(g, 2, {0, 1, 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(bockstein_inverse(n), NotCocycleError);
    CHECK_THROWS_AS(bockstein_inverse(IntCochain::dense(g, 1, {0, 1, 0})), std::invalid_argument);
}

TEST_CASE("inverse Bockstein averages over the first slot")
{
    auto g = make_cyclic(3);
    QZCochain phi = testing::cyclic_character(g, 1);
    IntCochain c4 = cup(bockstein_one(phi), bockstein_one(phi));
    QZCochain inv = bockstein_inverse_four(c4);
    for (Element a = 0; a < 3; ++a)
        for (Element b = 0; b < 3; ++b)
            for (Element c = 0; c < 3; ++c)
            {
                Int sum = 0;
                for (Element x = 0; x < 3; ++x)
                    sum += c4({x, a, b, c});
                CHECK(inv({a, b, c}) == QZ(sum, 3));
            }
    CHECK(is_cocycle(inv));
    CHECK_THROWS_AS(bockstein_inverse_four(bockstein_one(phi)), std::invalid_argument);
}

TEST_CASE("inverse Bockstein undoes the Bockstein on classes")
{
    Rng rng(21);
    for (auto g : {make_cyclic(4), make_cyclic(6), make_dihedral(3), make_quaternion(2)})
        for (int t = 0; t < 5; ++t)
        {
            QZCochain c = testing::random_cocycle3(g, rng);
            CHECK(classes_equal(bockstein_inverse_four(bockstein(c)), c));
            QZCochain c2 = coboundary(testing::random_qz_cochain(g, 1, 6, rng));
            CHECK(is_coboundary(bockstein_inverse(bockstein(c2))));
        }
}

TEST_CASE("phi u beta(phi) recovers from the integral square")
{
    for (int n : {2, 3, 5, 6})
    {
        auto g = make_cyclic(n);
        QZCochain phi = testing::cyclic_character(g, 1);
        QZCochain direct = cup(phi, bockstein_one(phi));
        QZCochain via = bockstein_inverse_four(cup(bockstein_one(phi), bockstein_one(phi)));
        CHECK(classes_equal(direct, via));
    }
}
