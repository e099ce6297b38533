#include "doctest.h"

#include "dwinv/chern.hpp"
#include "support.hpp"

using namespace dwinv;

namespace {

Subgroup gen_sub(const GroupPtr& g, Element x)
{
    std::vector<Element> gens{x};
    return Subgroup::generated_by(g, gens);
}

InducedRepSpec cyclic_spec(const GroupPtr& g, Element gen, Int k = 1)
{
    return induced_from_cyclic(gen_sub(g, gen), gen, k);
}

/// Parity of left multiplication by x on G, as 0 or 1/2.
QZ regular_parity(const FiniteGroup& g, Element x)
{
    std::vector<char> seen(g.order(), 0);
    int transpositions = 0;
    for (Element s = 0; s < g.order(); ++s)
    {
        if (seen[s])
            continue;
        int len = 0;
        for (Element t = s; !seen[t]; t = g.mul(x, t))
        {
            seen[t] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return QZ(transpositions % 2, 2);
}

struct Pair
{
    GroupPtr g;
    Element gen;
};

std::vector<Pair> route_matrix()
{
    return {{make_cyclic(4), 2},     {make_dihedral(3), 1}, {make_quaternion(2), 1},
            {make_cyclic(6), 2},     {make_dihedral(4), 1}, {make_dihedral(5), 1},
            {make_quaternion(3), 2}, {make_cyclic(12), 3},  {make_symmetric(3), 3}};
}

}   // namespace

TEST_CASE("constructed classes are cocycles")
{
    for (auto& [g, gen] : route_matrix())
    {
        auto spec = cyclic_spec(g, gen);
        CHECK(is_cocycle(twelve_c2_cocycle(spec)));
        CHECK(is_cocycle(twelve_c2_evens(spec)));
        CHECK(is_cocycle(two_c1c1_cocycle(spec, spec)));
    }
}

TEST_CASE("the two routes to 12 c2 agree")
{
    for (auto& [g, gen] : route_matrix())
    {
        auto spec = cyclic_spec(g, gen);
        CHECK(classes_equal(twelve_c2_evens(spec), twelve_c2_cocycle(spec)));
        auto spec3 = cyclic_spec(g, gen, 3);
        CHECK(classes_equal(twelve_c2_evens(spec3), twelve_c2_cocycle(spec3)));
    }
}

TEST_CASE("trivial and extendable characters give class zero")
{
    for (auto& [g, gen] : route_matrix())
    {
        auto spec = cyclic_spec(g, gen, 0);
        CHECK(is_coboundary(twelve_c2_evens(spec)));
        CHECK(is_zero(two_c1c1_cocycle(spec, cyclic_spec(g, gen))));
        if (gen_sub(g, gen).index() <= 2)
            CHECK(is_coboundary(twelve_c2_cocycle(spec)));
    }
    // H = G
    for (auto g : {make_cyclic(5), make_cyclic(6), make_dihedral(3)})
    {
        Subgroup whole = Subgroup::generated_by(g, std::vector<Element>{1, static_cast<Element>(g->order() - 1)});
        QZCochain chi = g->is_abelian() ? testing::cyclic_character(g, 1) : sign_character(gen_sub(g, 1));
        REQUIRE(whole.index() == 1);
        InducedRepSpec spec{whole, restrict_cochain(whole, chi)};
        CHECK(is_coboundary(twelve_c2_cocycle(spec)));
    }
    // phi the restriction of a character of G to a proper subgroup
    auto z6 = make_cyclic(6);
    Subgroup h = gen_sub(z6, 2);
    CHECK(is_coboundary(twelve_c2_cocycle({h, restrict_cochain(h, testing::cyclic_character(z6, 1))})));
    auto d3 = make_dihedral(3);
    Subgroup s = gen_sub(d3, 3);
    CHECK(is_coboundary(twelve_c2_cocycle({s, restrict_cochain(s, sign_character(gen_sub(d3, 1)))})));
    auto d4 = make_dihedral(4);
    Subgroup r2 = gen_sub(d4, 2);
    CHECK(is_coboundary(twelve_c2_cocycle({r2, restrict_cochain(r2, sign_character(gen_sub(d4, 4)))})));
}

TEST_CASE("12 c2 of the dihedral rotation representation has order 5")
{
    auto spec = cyclic_spec(make_dihedral(5), 1);
    QZCochain c = twelve_c2_cocycle(spec);
    CHECK(class_order(c) == 5);
    auto fp = pairing_fingerprint(c);
    REQUIRE(fp.size() == 1);
    CHECK(fp[0].den() == 5);
}

TEST_CASE("two c1 c1 on a cyclic group pairs to 2/n with the lens cycle")
{
    for (int n : {3, 4, 5, 7})
    {
        auto g = make_cyclic(n);
        auto spec = cyclic_spec(g, 1);
        REQUIRE(spec.subgroup.index() == 1);
        CHECK(pair(two_c1c1_cocycle(spec, spec), lens_cycle(g, 1)) == QZ(2, n));
    }
    auto z4 = make_cyclic(4);
    auto a = cyclic_spec(z4, 1), b = cyclic_spec(z4, 1, 2);
    CHECK(classes_equal(two_c1c1_cocycle(a, b), two_c1c1_cocycle(b, a)));
    CHECK_THROWS_AS(two_c1c1_cocycle(a, cyclic_spec(make_cyclic(4), 1)), std::invalid_argument);
}

TEST_CASE("virtual representations")
{
    auto d3 = make_dihedral(3);
    auto a = cyclic_spec(d3, 1), b = cyclic_spec(d3, 3);
    CHECK(equal_pointwise(twelve_c2_virtual({{{1, a}}}), twelve_c2_cocycle(a)));
    CHECK(is_zero(twelve_c2_virtual({{{0, a}, {0, b}}})));
    QZCochain whitney = twelve_c2_cocycle(a) + twelve_c2_cocycle(b) + two_c1c1_cocycle(a, b) * 6;
    CHECK(classes_equal(twelve_c2_virtual({{{1, a}, {1, b}}}), whitney));
    CHECK_THROWS_AS(twelve_c2_virtual({{{1, a}, {1, cyclic_spec(make_dihedral(3), 1)}}}), std::invalid_argument);
}

TEST_CASE("sign character of the coset action")
{
    auto z4 = make_cyclic(4);
    QZCochain e = sign_character(gen_sub(z4, 2));
    CHECK(e({1}) == QZ(1, 2));
    CHECK(e({2}) == QZ());
    auto s3 = make_symmetric(3);
    Subgroup a3 = Subgroup::generated_by(s3, std::vector<Element>{});
    for (Element x = 0; x < 6; ++x)
        if (s3->element_order(x) == 3)
            a3 = gen_sub(s3, x);
    QZCochain sgn = sign_character(a3);
    for (Element x = 0; x < 6; ++x)
        CHECK(sgn({x}) == regular_parity(*s3, x));
    auto d5 = make_dihedral(5);
    CHECK(is_zero(sign_character(Subgroup::generated_by(d5, std::vector<Element>{1, 5}))));
}

TEST_CASE("first Chern class doubled matches twice the transfer")
{
    for (auto& [g, gen] : route_matrix())
    {
        auto spec = cyclic_spec(g, gen);
        IntCochain eps = bockstein_one(sign_character(spec.subgroup));
        IntCochain lhs = (bockstein_one(transfer_cochain(spec.subgroup, spec.phi)) + eps) * 2;
        IntCochain rhs = (transfer_cochain(spec.subgroup, bockstein_one(spec.phi)) + eps) * 2;
        CHECK(classes_equal(lhs, rhs));
    }
}

TEST_CASE("odd part from the norm class for index two")
{
    // |G| prime to 3: the odd part is recoverable from 12 c2
    for (auto [g, gen] : std::vector<std::pair<GroupPtr, Element>>{{make_dihedral(5), 1}, {make_cyclic(10), 2}})
    {
        auto spec = cyclic_spec(g, gen);
        REQUIRE(spec.subgroup.index() == 2);
        CHECK(classes_equal(odd_part_c2_evens(spec), divide_class(twelve_c2_cocycle(spec), 12, 5)));
    }
    // 3 | |G|: 12 c2 vanishes on the 3-part but the odd part does not
    for (auto [g, gen] : std::vector<std::pair<GroupPtr, Element>>{
             {make_dihedral(3), 1}, {make_quaternion(3), 1}, {make_cyclic(6), 2}})
    {
        auto spec = cyclic_spec(g, gen);
        REQUIRE(spec.subgroup.index() == 2);
        QZCochain odd = odd_part_c2_evens(spec);
        CHECK(class_order(odd) == 3);
        CHECK(classes_equal(odd * 12, twelve_c2_cocycle(spec) * 3));
    }
    CHECK_THROWS_AS(odd_part_c2_evens(cyclic_spec(make_cyclic(9), 3)), std::invalid_argument);
}

TEST_CASE("dividing a class by an invertible integer")
{
    auto spec = cyclic_spec(make_dihedral(5), 1);
    QZCochain c = twelve_c2_cocycle(spec);
    CHECK(equal_pointwise(divide_class(c, 1, 5), c));
    QZCochain third = divide_class(c, 12, 5);
    CHECK(equal_pointwise(third, c * 3));
    CHECK(classes_equal(third * 12, c));
    CHECK_THROWS_AS(divide_class(c, 12, 3), std::domain_error);
    CHECK_THROWS_AS(divide_class(c, 1, 2), std::domain_error);
}
