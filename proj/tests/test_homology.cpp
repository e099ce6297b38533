#include "doctest.h"

#include "support.hpp"

using namespace dwinv;
using testing::Rng;

namespace {

/// |G / [G, G]| from the subgroup generated by all commutators.
int abelianization_order(const GroupPtr& g)
{
    std::vector<Element> comms;
    for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
            comms.push_back(g->mul(g->mul(a, b), g->inv(g->mul(b, a))));
    return g->order() / Subgroup::generated_by(g, comms).order();
}

void check_structure(const HomologyGroup& h)
{
    REQUIRE(h.generators.size() == h.divisors.size());
    REQUIRE(h.dual_cocycles.size() == h.divisors.size());
    for (std::size_t k = 0; k < h.divisors.size(); ++k)
    {
        CHECK(h.divisors[k] > 1);
        if (k > 0)
            CHECK(h.divisors[k] % h.divisors[k - 1] == 0);
        CHECK(boundary(h.generators[k]).empty());
        CHECK(is_cocycle(h.dual_cocycles[k]));
        for (std::size_t l = 0; l < h.divisors.size(); ++l)
            CHECK(pair(h.dual_cocycles[k], h.generators[l]) == (k == l ? QZ(1, h.divisors[k]) : QZ()));
    }
}

}   // namespace

TEST_CASE("H_3 of cyclic groups is cyclic of the same order")
{
    for (int n = 2; n <= 12; ++n)
    {
        const auto& h = homology_group(make_cyclic(n), 3);
        CHECK(h.divisors == std::vector<Int>{n});
        check_structure(h);
    }
}

TEST_CASE("H_1 agrees with the abelianization")
{
    for (auto g : {make_cyclic(6), make_dihedral(3), make_dihedral(4), make_dihedral(5), make_quaternion(2),
                   make_quaternion(3), make_symmetric(3), make_sl2(3)})
    {
        const auto& h = homology_group(g, 1);
        CHECK(h.order() == abelianization_order(g));
        check_structure(h);
    }
    CHECK(homology_group(make_quaternion(3), 1).divisors == std::vector<Int>{4});
    CHECK(homology_group(make_quaternion(2), 1).divisors == std::vector<Int>{2, 2});
}

TEST_CASE("known low-dimensional homology")
{
    CHECK(homology_group(make_quaternion(2), 2).divisors.empty());
    CHECK(homology_group(make_cyclic(5), 2).divisors.empty());
    CHECK(homology_group(make_dihedral(2), 2).divisors == std::vector<Int>{2});
    auto q8 = homology_group(make_quaternion(2), 3);
    CHECK(q8.divisors == std::vector<Int>{8});
    check_structure(q8);
    auto d3 = homology_group(make_dihedral(3), 3);
    CHECK(d3.divisors == std::vector<Int>{6});
    check_structure(d3);
    CHECK(homology_group(make_dihedral(2), 3).divisors == std::vector<Int>{2, 2, 2});
}

TEST_CASE("results do not depend on the elimination order")
{
    auto g = make_quaternion(3);
    for (std::uint64_t seed : {1u, 7u, 99u})
    {
        auto h = compute_homology(g, 3, {16, seed});
        CHECK(h.divisors == std::vector<Int>{12});
        check_structure(h);
    }
}

TEST_CASE("degree 3 refuses groups beyond the cap")
{
    CHECK_THROWS(compute_homology(make_dihedral(7), 3, {12, 0}));
    CHECK_THROWS(compute_homology(make_cyclic(17), 3, {16, 0}));
}

TEST_CASE("coboundary decider with witnesses")
{
    Rng rng(51);
    for (auto g : {make_cyclic(4), make_dihedral(3), make_quaternion(2)})
        for (int degree = 1; degree <= 3; ++degree)
        {
            QZCochain b = testing::random_qz_cochain(g, degree - 1, 12, rng);
            auto sol = solve_coboundary(coboundary(b));
            REQUIRE(sol.is_coboundary);
            CHECK(equal_pointwise(coboundary(*sol.witness), coboundary(b)));

            IntCochain ib = testing::random_int_cochain(g, degree - 1, 5, rng);
            auto isol = solve_coboundary(coboundary(ib));
            REQUIRE(isol.is_coboundary);
            CHECK(equal_pointwise(coboundary(*isol.witness), coboundary(ib)));
        }
    auto z5 = make_cyclic(5);
    CHECK(!is_coboundary(testing::cyclic_character(z5, 2)));
    CHECK(!is_coboundary(bockstein_one(testing::cyclic_character(z5, 1))));
}

TEST_CASE("class order of the dual generators and of random cocycles")
{
    Rng rng(52);
    for (auto g : {make_cyclic(6), make_dihedral(3), make_quaternion(2)})
    {
        const auto& h = homology_group(g, 3);
        for (std::size_t k = 0; k < h.divisors.size(); ++k)
            CHECK(class_order(h.dual_cocycles[k]) == h.divisors[k]);
        for (int t = 0; t < 5; ++t)
        {
            QZCochain c = testing::random_cocycle3(g, rng);
            Int ord = class_order(c);
            REQUIRE(ord >= 1);
            CHECK(h.order() % ord == 0);
            CHECK(is_coboundary(c * ord));
            auto fp = pairing_fingerprint(c);
            Int lcm_den = 1;
            for (const QZ& v : fp)
                lcm_den = lcm(lcm_den, v.den());
            CHECK(lcm_den == ord);
            CHECK(classes_equal(c, c + coboundary(testing::random_qz_cochain(g, 2, 6, rng))));
        }
    }
}
