// Command-line front end: dw, pair, cocycle, homology, cmcheck, transfer, selftest.
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "dwinv/bockstein.hpp"
#include "dwinv/chern.hpp"
#include "dwinv/cmtype.hpp"
#include "dwinv/dw.hpp"
#include "dwinv/homology.hpp"
#include "dwinv/parallel.hpp"
#include "dwinv/spec_io.hpp"
#include "dwinv/transfer.hpp"

using namespace dwinv;

namespace {

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

/// phi on G from comma-separated generators and p/q images.
QZCochain character_from_args(const GroupPtr& g, const std::string& gens, const std::string& images)
{
    Json gl = Json::array(), il = Json::array();
    std::stringstream gs(gens), is(images);
    std::string item;
    while (std::getline(gs, item, ','))
        gl.push_back(Json::parse(item));
    while (std::getline(is, item, ','))
        il.push_back(item);
    return character_from_json(Json{{"gens", gl}, {"phi", il}}, g);
}

int run_selftest()
{
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        failures += ok ? 0 : 1;
    };

    {
        ManifoldModel l = lens_space(5, 2);
        QZCochain psi = cocycle_from_text("linking:phi=1", l.quotient);
        GroupRingElement expected;
        for (int j = 1; j <= 5; ++j)
            expected.add(QZ(2 * j * j, 5));
        check("lens L(5,2) golden", dw_invariant(l, l.quotient, psi) == expected);
    }
    {
        std::mt19937_64 rng(7);
        GroupPtr g = make_dihedral(3);
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t)
        {
            std::vector<QZ> v(static_cast<std::size_t>(tuple_count(g->order(), 2)));
            for (auto& x : v)
                x = QZ(static_cast<Int>(rng() % 6), 6);
            QZCochain c = QZCochain::dense(g, 2, std::move(v));
            ok = is_zero(coboundary(coboundary(c)));
        }
        check("coboundary squares to zero on D3", ok);
    }
    {
        ManifoldModel m = quaternionic_space_form(3);
        GroupPtr d3 = make_dihedral(3);
        std::vector<Element> r{1};
        Subgroup h = Subgroup::generated_by(d3, r);
        QZCochain phi = induced_from_cyclic(h, 1).phi;
        bool ok = true;
        try
        {
            covering_sides(m, d3, h, cup(phi, bockstein_one(phi)), 1);
        }
        catch (const VerificationError&)
        {
            ok = false;
        }
        check("covering identity on S^3/Q_12 -> D3", ok);
    }
    {
        GroupPtr z4 = make_cyclic(4);
        std::vector<Element> gen{2};
        InducedRepSpec spec = induced_from_cyclic(Subgroup::generated_by(z4, gen), 2);
        check("Riemann-Roch and norm routes agree on Z/4 > Z/2",
              classes_equal(twelve_c2_cocycle(spec), twelve_c2_evens(spec)));
    }
    return failures == 0 ? 0 : 2;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dijkgraaf-Witten invariants from second Chern classes"};
    app.require_subcommand(1);
    unsigned threads = 1;
    int snf = kDefaultSnfCap;
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--snf-cap", snf, "largest group order for degree-3 homology")
        ->check(CLI::Range(1, kHardSnfCap));

    std::string manifold, group, cocycle, subgroup, reading = "dividing", gens = "1", phi1, phi2;
    int degree = 3;
    Int m = 1;
    std::vector<std::string> candidates;

    auto* dw = app.add_subcommand("dw", "DW invariant of a manifold for a group and 3-cocycle");
    dw->add_option("--manifold", manifold, "lens:n,q | quaternionic:n | JSON")->required();
    dw->add_option("--group", group, "cyclic:n | dihedral:n | ... | JSON")->required();
    dw->add_option("--cocycle", cocycle, "zero | linking:phi=k | JSON")->required();

    auto* pr = app.add_subcommand("pair", "linking pairing <f^*(phi1 u beta phi2), [M]> for every f");
    pr->add_option("--manifold", manifold)->required();
    pr->add_option("--group", group)->required();
    pr->add_option("--gens", gens, "comma-separated generators of G (default 1)");
    pr->add_option("--phi1", phi1, "images of the generators, comma-separated p/q")->required();
    pr->add_option("--phi2", phi2, "defaults to phi1");

    auto* cc = app.add_subcommand("cocycle", "build a cocycle and report its class");
    cc->add_option("--group", group)->required();
    cc->add_option("--cocycle", cocycle)->required();

    auto* hm = app.add_subcommand("homology", "H_n(G; Z) with generating cycles");
    hm->add_option("--group", group)->required();
    hm->add_option("--degree", degree)->check(CLI::Range(1, 3));

    auto* cm = app.add_subcommand("cmcheck", "type C_m certificate");
    cm->add_option("--group", group)->required();
    cm->add_option("--m", m)->check(CLI::PositiveNumber);
    cm->add_option("--candidate", candidates, "JSON {\"H\":[gens],\"phi\":[images]}")->required();
    cm->add_option("--reading", reading, "gcd clause: dividing | literal")
        ->check(CLI::IsMember({"dividing", "literal"}));

    auto* tr = app.add_subcommand("transfer", "transfer of a cocycle given on a subgroup");
    tr->add_option("--group", group)->required();
    tr->add_option("--subgroup", subgroup, "JSON list of generators")->required();
    tr->add_option("--cocycle", cocycle, "cocycle spec on the subgroup")->required();

    auto* st = app.add_subcommand("selftest", "run the built-in invariant checks");

    CLI11_PARSE(app, argc, argv);

    try
    {
        set_thread_count(threads);
        set_snf_cap(snf);
        if (dw->parsed())
        {
            ManifoldModel mm = manifold_from_text(manifold);
            GroupPtr g = group_from_text(group);
            GroupRingElement e = dw_invariant(mm, g, cocycle_from_text(cocycle, g));
            emit(group_ring_to_json(e));
            std::cout << e.str() << "\n";
        }
        else if (pr->parsed())
        {
            ManifoldModel mm = manifold_from_text(manifold);
            GroupPtr g = group_from_text(group);
            QZCochain a = character_from_args(g, gens, phi1);
            QZCochain b = phi2.empty() ? a : character_from_args(g, gens, phi2);
            Json out = Json::array();
            for (const auto& f : enumerate_homs(mm, g))
            {
                std::vector<Element> images;
                for (Element x : mm.projection)
                    images.push_back(f(x));
                out.push_back(Json{{"images", images}, {"value", linking_pairing(mm, f, a, b).str()}});
            }
            emit(out);
        }
        else if (cc->parsed())
        {
            GroupPtr g = group_from_text(group);
            QZCochain c = cocycle_from_text(cocycle, g);
            Json out{{"cocycle", cochain_to_json(c)}, {"is_cocycle", is_cocycle(c)}};
            if (c.degree() == 3 && g->order() <= snf_cap())
            {
                Json fp = Json::array();
                for (const QZ& v : pairing_fingerprint(c))
                    fp.push_back(v.str());
                out["fingerprint"] = fp;
                out["class_order"] = class_order(c);
            }
            emit(out);
        }
        else if (hm->parsed())
        {
            emit(homology_to_json(homology_group(group_from_text(group), degree)));
        }
        else if (cm->parsed())
        {
            GroupPtr g = group_from_text(group);
            std::vector<InducedRepSpec> specs;
            for (const auto& text : candidates)
            {
                Json j = parse_json_text(text, "candidate");
                if (!j.contains("H") || !j.contains("phi"))
                    throw SpecError("candidate: expected {\"H\":[..],\"phi\":[..]}");
                specs.push_back(induced_from_json(j["H"], j["phi"], g, "/candidate"));
            }
            CmCertificate cert =
                cm_check(g, m, specs, reading == "literal" ? GcdReading::Literal : GcdReading::Dividing);
            if (!revalidate(cert))
                throw VerificationError("cmcheck: certificate does not revalidate");
            emit(certificate_to_json(cert));
        }
        else if (tr->parsed())
        {
            GroupPtr g = group_from_text(group);
            Subgroup h = subgroup_from_json(parse_json_text(subgroup, "subgroup"), g, "/subgroup");
            emit(cochain_to_json(transfer_cochain(h, cocycle_from_text(cocycle, h.as_group()))));
        }
        else if (st->parsed())
        {
            return run_selftest();
        }
    }
    catch (const VerificationError& e)
    {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::domain_error& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    catch (const SizeBoundError& e)
    {
        std::cerr << "size bound: " << e.what() << "\n";
        return 1;
    }
    catch (const std::logic_error& e)
    {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
