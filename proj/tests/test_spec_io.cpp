#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <functional>

#include "dwinv/spec_io.hpp"
#include "support.hpp"

using namespace dwinv;

namespace {

std::string error_of(const std::function<void()>& f)
{
    try
    {
        f();
    }
    catch (const SpecError& e)
    {
        return e.what();
    }
    return "";
}

}   // namespace

TEST_CASE("group specs")
{
    CHECK(group_from_text("cyclic:7")->order() == 7);
    CHECK(group_from_text("dihedral:5")->order() == 10);
    CHECK(group_from_text("quaternion:3")->order() == 12);
    CHECK(group_from_text("symmetric:3")->order() == 6);
    CHECK(group_from_text("sl2:3")->order() == 24);
    CHECK(group_from_text(R"({"kind":"dihedral","n":4})")->order() == 8);
    auto z2 = group_from_text(R"({"kind":"table","order":2,"table":[0,1,1,0]})");
    CHECK(z2->order() == 2);
    CHECK_THROWS_AS(group_from_text("cyclic"), SpecError);
    CHECK_THROWS_AS(group_from_text("torus:3"), SpecError);
    CHECK_THROWS_AS(group_from_text(R"({"kind":"table","order":3,"table":[0,1,2,1,1,0,2,0,1]})"), SpecError);
    CHECK(error_of([] { group_from_text(R"({"kind":"cyclic"})"); }).find("/n") != std::string::npos);
}

TEST_CASE("malformed JSON reports the byte offset")
{
    std::string msg = error_of([] { parse_json_text(R"({"kind": cyclic})", "group"); });
    CHECK(msg.find("malformed JSON at byte") != std::string::npos);
    CHECK_THROWS_AS(parse_json_text("@/nonexistent/spec.json", "group"), SpecError);
}

TEST_CASE("specs can be read from files")
{
    const std::string path = "spec_io_test_group.json";
    {
        std::ofstream out(path);
        out << R"({"kind":"quaternion","n":2})";
    }
    CHECK(group_from_text("@" + path)->order() == 8);
    std::remove(path.c_str());
}

TEST_CASE("manifold specs")
{
    auto m = manifold_from_text("lens:5,2");
    CHECK(m.quotient->order() == 5);
    CHECK(chain_to_json(m.fundamental_cycle) == chain_to_json(lens_space(5, 2).fundamental_cycle));
    CHECK(manifold_from_text("quaternionic:3").quotient->order() == 12);
    auto r = manifold_from_text(R"({"kind":"lens","n":5,"q":2,"orientation":-1})");
    CHECK(r.orientation == -1);
    CHECK(manifold_from_text(R"({"kind":"quaternionic","n":3,"orientation":-1})").orientation == -1);
    CHECK_THROWS_AS(manifold_from_text("lens:3,3"), SpecError);
    CHECK_THROWS_AS(manifold_from_text("lens:3"), SpecError);
    CHECK_THROWS_AS(manifold_from_text("sphere:1"), SpecError);
}

TEST_CASE("explicit presentations round-trip through JSON")
{
    auto lens = lens_space(3, 1);
    Json j{{"kind", "presentation"},
           {"name", "L(3,1) by hand"},
           {"generators", 1},
           {"relators", Json::array({Json::array({1, 1, 1})})},
           {"quotient", "cyclic:3"},
           {"images", Json::array({1})},
           {"cycle", chain_to_json(lens.fundamental_cycle)}};
    auto m = manifold_from_json(j);
    CHECK(m.name == "L(3,1) by hand");
    CHECK(m.fundamental_cycle == chain_from_json(chain_to_json(lens.fundamental_cycle), m.quotient));
    auto z3 = m.quotient;
    QZCochain psi = cocycle_from_text("linking:phi=1", z3);
    CHECK(dw_invariant(m, z3, psi) == testing::lens_formula(3, 1));

    Json bad = j;
    bad["cycle"] = Json{{"degree", 3}, {"terms", Json::array({Json::array({1, Json::array({1, 1, 1})})})}};
    CHECK_THROWS_AS(manifold_from_json(bad), SpecError);
    Json bad_letter = j;
    bad_letter["relators"] = Json::array({Json::array({1, 2})});
    CHECK_THROWS_AS(manifold_from_json(bad_letter), SpecError);
}

TEST_CASE("cochains round-trip")
{
    testing::Rng rng(81);
    auto g = make_dihedral(3);
    QZCochain c = testing::random_qz_cochain(g, 2, 12, rng);
    Json j = cochain_to_json(c);
    CHECK(j["values"].size() == 36);
    CHECK(equal_pointwise(qz_cochain_from_json(j, g), c));
    j["values"].erase(0);
    CHECK(error_of([&] { qz_cochain_from_json(j, g); }).find("/values") != std::string::npos);
    BarChain z(g, 2);
    z.add({1, 4}, 3);
    z.add({5, 0}, -1);
    CHECK(chain_from_json(chain_to_json(z), g) == z);
    CHECK_THROWS_AS(chain_from_json(Json{{"degree", 2}, {"terms", Json::array({Json::array({1, Json::array({9, 0})})})}}, g),
                    SpecError);
}

TEST_CASE("cocycle constructors by name")
{
    auto d3 = group_from_text("dihedral:3");
    Subgroup h = Subgroup::generated_by(d3, std::vector<Element>{1});
    auto spec = induced_from_cyclic(h, 1);
    QZCochain twelve = cocycle_from_text(R"({"kind":"twelve_c2","H":[1],"phi":"1/3"})", d3);
    CHECK(equal_pointwise(twelve, twelve_c2_cocycle(spec)));
    QZCochain evens = cocycle_from_text(R"({"kind":"twelve_c2_evens","H":[1],"phi":["1/3"]})", d3);
    CHECK(classes_equal(evens, twelve));
    QZCochain odd = cocycle_from_text(R"({"kind":"odd_part_c2","H":[1],"phi":"1/3"})", d3);
    CHECK(equal_pointwise(odd, odd_part_c2_evens(spec)));
    QZCochain c1c1 = cocycle_from_text(R"({"kind":"two_c1c1","H":[1],"phi":"1/3","H2":[3],"phi2":"1/2"})", d3);
    CHECK(is_cocycle(c1c1));
    CHECK(is_zero(cocycle_from_text("zero", d3)));

    auto d5 = group_from_text("dihedral:5");
    CHECK_THROWS_AS(cocycle_from_text(R"({"kind":"c2","H":[1],"phi":"1/5"})", d5), std::domain_error);
    QZCochain c2 = cocycle_from_text(R"({"kind":"c2","H":[1],"phi":"1/5","order":5})", d5);
    CHECK(classes_equal(c2 * 12, twelve_c2_cocycle(induced_from_cyclic(Subgroup::generated_by(d5, std::vector<Element>{1}), 1))));

    QZCochain tr = cocycle_from_text(R"({"kind":"transfer","H":[1],"cocycle":{"kind":"linking","phi":"1/3"}})", d3);
    QZCochain phi = testing::cyclic_character(h.as_group(), 1);
    CHECK(equal_pointwise(tr, transfer_cochain(h, cup(phi, bockstein_one(phi)))));

    auto z4 = group_from_text("cyclic:4");
    QZCochain lk = cocycle_from_text("linking:phi=3", z4);
    QZCochain phi3 = testing::cyclic_character(z4, 3);
    CHECK(equal_pointwise(lk, cup(phi3, bockstein_one(phi3))));

    auto z7 = group_from_text("cyclic:7");
    QZCochain c2z7 = cocycle_from_text(R"({"kind":"two_c1c1","H":[1],"phi":"1/7","H2":[1],"phi2":"3/7"})", z7);
    CHECK(is_cocycle(c2z7));
    QZCochain c2_7 = cocycle_from_text(R"({"kind":"c2","H":[1],"phi":"1/7"})", z7);
    CHECK(is_coboundary(c2_7));
}

TEST_CASE("cocycle spec errors")
{
    auto d3 = group_from_text("dihedral:3");
    CHECK_THROWS_AS(cocycle_from_text("linking:phi=1", d3), SpecError);
    CHECK_THROWS_AS(cocycle_from_text("linking:psi=1", group_from_text("cyclic:3")), SpecError);
    CHECK_THROWS_AS(cocycle_from_text(R"({"kind":"nonsense"})", d3), SpecError);
    CHECK_THROWS_AS(cocycle_from_text(R"({"kind":"twelve_c2","H":[1],"phi":"1/2"})", d3), std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_text(R"({"kind":"twelve_c2","H":[7],"phi":"1/3"})", d3), SpecError);
    CHECK_THROWS_AS(cocycle_from_text(R"({"kind":"c2","H":[1],"phi":"1/3"})", d3), std::domain_error);
    CHECK(error_of([&] { cocycle_from_text(R"({"kind":"nonsense"})", d3); }).find("/kind") != std::string::npos);
}

TEST_CASE("result renderings are canonical")
{
    GroupRingElement e;
    e.add(QZ(1, 3), 2);
    e.add(QZ());
    CHECK(group_ring_to_json(e).dump() == R"({"terms":[["0/1",1],["1/3",2]]})");
    auto h = homology_to_json(homology_group(make_cyclic(4), 3));
    CHECK(h["divisors"] == Json::array({4}));
    CHECK(h["degree"] == 3);
    auto z5 = make_cyclic(5);
    auto cert = cm_check(z5, 1, {induced_from_cyclic(Subgroup::generated_by(z5, std::vector<Element>{1}), 1)});
    Json cj = certificate_to_json(cert);
    CHECK(cj["verdict"] == verdict_name(Verdict::Certified));
    CHECK(cj.dump() == certificate_to_json(cert).dump());
}
