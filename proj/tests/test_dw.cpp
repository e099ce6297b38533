#include "doctest.h"

#include "dwinv/chern.hpp"
#include "dwinv/parallel.hpp"
#include "support.hpp"

using namespace dwinv;
using testing::Rng;

namespace {

QZCochain phi_beta_phi(const QZCochain& phi)
{
    return cup(phi, bockstein_one(phi));
}

}   // namespace

TEST_CASE("group ring elements")
{
    GroupRingElement e;
    e.add(QZ());
    e.add(QZ(1, 3), 2);
    e.add(QZ(4, 3));
    CHECK(e.multiplicity(QZ(1, 3)) == 3);
    CHECK(e.total() == 4);
    CHECK(e.str() == "1 + 3·e(1/3)");
    CHECK(e.conjugate().multiplicity(QZ(2, 3)) == 3);
    e.add(QZ(1, 3), -3);
    CHECK(e.terms().size() == 1);
    CHECK(e.str() == "1");
}

TEST_CASE("lens space invariants match the quadratic Gauss sum")
{
    for (int n = 2; n <= 9; ++n)
        for (Int q = 1; q < n; ++q)
        {
            if (gcd(q, n) != 1)
                continue;
            auto m = lens_space(n, q);
            auto g = make_cyclic(n);
            CAPTURE(n);
            CAPTURE(q);
            CHECK(dw_invariant(m, g, phi_beta_phi(testing::cyclic_character(g, 1))) == testing::lens_formula(n, q));
        }
    auto z3 = make_cyclic(3);
    auto l31 = dw_invariant(lens_space(3, 1), z3, phi_beta_phi(testing::cyclic_character(z3, 1)));
    CHECK(l31.str() == "1 + 2·e(1/3)");
}

TEST_CASE("the zero cocycle counts homomorphisms")
{
    auto m = quaternionic_space_form(3);
    for (auto g : {make_dihedral(3), make_symmetric(3), make_cyclic(4)})
    {
        auto e = dw_invariant(m, g, QZCochain::zero(g, 3));
        CHECK(e.terms().size() <= 1);
        CHECK(e.multiplicity(QZ()) == static_cast<Int>(enumerate_homs(m, g).size()));
    }
}

TEST_CASE("invariants depend only on the class of psi")
{
    Rng rng(71);
    auto m = quaternionic_space_form(3);
    for (auto g : {make_dihedral(3), make_cyclic(6), make_quaternion(2)})
    {
        QZCochain psi = testing::random_cocycle3(g, rng);
        QZCochain shifted = psi + coboundary(testing::random_qz_cochain(g, 2, 12, rng));
        CHECK(dw_invariant(m, g, psi) == dw_invariant(m, g, shifted));
    }
    auto d3 = make_dihedral(3);
    CHECK_THROWS_AS(dw_invariant(m, d3, testing::random_qz_cochain(d3, 3, 7, rng)), NotCocycleError);
}

TEST_CASE("reversing the orientation conjugates the invariant")
{
    auto g = make_cyclic(5);
    QZCochain psi = phi_beta_phi(testing::cyclic_character(g, 1));
    auto m = lens_space(5, 2);
    CHECK(dw_invariant(reversed(m), g, psi) == dw_invariant(m, g, psi).conjugate());
    CHECK(dw_invariant(reversed(m), g, psi) == testing::lens_formula(5, 3));
}

TEST_CASE("thread count does not change the result")
{
    auto m = quaternionic_space_form(5);
    auto d5 = make_dihedral(5);
    QZCochain psi = odd_part_c2_evens(induced_from_cyclic(Subgroup::generated_by(d5, std::vector<Element>{1}), 1));
    const unsigned saved = thread_count();
    set_thread_count(1);
    auto one = dw_invariant(m, d5, psi);
    set_thread_count(4);
    auto four = dw_invariant(m, d5, psi);
    set_thread_count(saved);
    CHECK(one == four);
    CHECK(one.total() == 26);
}

TEST_CASE("linking pairing")
{
    auto m = lens_space(6, 1);
    auto z6 = m.quotient;
    auto id = GroupHom::identity(z6);
    for (Int a = 0; a < 6; ++a)
        for (Int b = 0; b < 6; ++b)
        {
            QZ ab = linking_pairing(m, id, testing::cyclic_character(z6, a), testing::cyclic_character(z6, b));
            CHECK(ab == QZ(a * b, 6));
            QZ sum = linking_pairing(m, id, testing::cyclic_character(z6, a) + testing::cyclic_character(z6, 1),
                                     testing::cyclic_character(z6, b));
            CHECK(sum == ab + linking_pairing(m, id, testing::cyclic_character(z6, 1), testing::cyclic_character(z6, b)));
        }
    CHECK(linking_pairing(m, id, testing::cyclic_character(z6, 1), QZCochain::zero(z6, 1)) == QZ());
    CHECK_THROWS_AS(linking_pairing(m, id, QZCochain::dense(z6, 1, std::vector<QZ>(6, QZ(1, 6))),
                                    testing::cyclic_character(z6, 1)),
                    std::invalid_argument);
}

TEST_CASE("the trivial covering reproduces the invariant")
{
    Rng rng(72);
    auto m = quaternionic_space_form(3);
    for (auto g : {make_dihedral(3), make_cyclic(4)})
    {
        QZCochain psi = testing::random_cocycle3(g, rng);
        Subgroup all = Subgroup::whole(g);
        CHECK(dw_via_covering(m, g, all, restrict_cochain(all, psi), 1) == dw_invariant(m, g, psi));
    }
}

TEST_CASE("covering identity on M5 over D5")
{
    auto m = quaternionic_space_form(5);
    auto d5 = make_dihedral(5);
    Subgroup h = Subgroup::generated_by(d5, std::vector<Element>{1});
    QZCochain psi_h = phi_beta_phi(testing::cyclic_character(h.as_group(), 1));
    auto sides = covering_sides(m, d5, h, psi_h, 1);
    CHECK(sides.size() == 26);
    for (const auto& s : sides)
    {
        CHECK(s.lhs == s.rhs);
        CHECK(s.lhs == evaluate_on_cycle(m, s.f, transfer_cochain(h, psi_h)));
    }
    CHECK_THROWS_AS(covering_sides(m, d5, h, psi_h, 2), std::invalid_argument);
    Rng rng(73);
    CHECK_THROWS_AS(dw_via_covering(m, d5, h, testing::random_qz_cochain(h.as_group(), 3, 5, rng), 1),
                    NotCocycleError);
}
