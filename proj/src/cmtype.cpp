#include "dwinv/cmtype.hpp"

namespace dwinv {

std::string verdict_name(Verdict v)
{
    switch (v)
    {
        case Verdict::Certified: return "CERTIFIED";
        case Verdict::Failed: return "FAILED";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

std::vector<Int> class_coordinates(const QZCochain& c, const HomologyGroup& h)
{
    std::vector<QZ> fp = pairing_fingerprint(c, h);
    std::vector<Int> out(fp.size());
    for (std::size_t k = 0; k < fp.size(); ++k)
    {
        Int d = h.divisors[k];
        if (d % fp[k].den() != 0)
            throw std::logic_error("class_coordinates: pairing value does not fit the divisor");
        out[k] = fp[k].num() * (d / fp[k].den());
    }
    return out;
}

namespace {

std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> ps;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0)
        {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

struct KnownClass
{
    std::vector<Int> coords;
    /// The class is this multiple of an element of the Chern subring.
    Int multiplier;
};

/// beta^{-1}(Phi^* c4) + 2 beta^{-1}(beta(eps) u Tr(beta phi)): 2 beta^{-1} c2 when [G:H] <= 2.
QZCochain two_c2_from_norm(const InducedRepSpec& spec)
{
    IntCochain norm = evens_norm_four_cocycle(spec.subgroup, spec.phi);
    IntCochain beps = bockstein_one(sign_character(spec.subgroup));
    IntCochain trb = transfer_cochain(spec.subgroup, bockstein_one(spec.phi));
    return bockstein_inverse_four(norm, false) + bockstein_inverse_four(cup(beps, trb)) * Int{2};
}

/// beta^{-1}(c1(Ind phi) c1(Ind phi2)), using det(Ind phi) = (phi o Tr) * sign.
QZCochain c1c1_exact(const InducedRepSpec& a, const InducedRepSpec& b)
{
    QZCochain d1 = transfer_cochain(a.subgroup, a.phi) + sign_character(a.subgroup);
    QZCochain d2 = transfer_cochain(b.subgroup, b.phi) + sign_character(b.subgroup);
    return cup(d1, bockstein_one(d2));
}

std::vector<QZCochain> restricted_basis(const HomologyGroup& hg, const Subgroup& sub)
{
    std::vector<QZCochain> out;
    for (const auto& kappa : hg.dual_cocycles)
        out.push_back(restrict_cochain(sub, kappa));
    return out;
}

void check_condition_ii(CmCertificate& cert, const HomologyGroup& hg)
{
    bool all = true;
    for (auto& w : cert.witnesses)
    {
        const Subgroup& sub = w.spec.subgroup;
        const HomologyGroup& hh = homology_group(sub.as_group(), 3);
        QZCochain target = cup(w.spec.phi, bockstein_one(w.spec.phi)) * cert.m;
        std::vector<std::vector<Int>> gens;
        for (const auto& r : restricted_basis(hg, sub))
            gens.push_back(class_coordinates(r, hh));
        auto coeffs = express_in_subgroup(gens, hh.divisors, class_coordinates(target, hh));
        if (coeffs)
        {
            QZCochain kappa = QZCochain::zero(cert.group, 3);
            for (std::size_t k = 0; k < coeffs->size(); ++k)
                kappa = kappa + hg.dual_cocycles[k] * (*coeffs)[k];
            w.kappa = kappa;
        }
        bool gcd_ok = cert.reading == GcdReading::Literal ? w.m_divides_gcd : w.gcd_divides_m;
        all = all && gcd_ok && w.kappa.has_value();
    }
    cert.condition_ii = all ? Verdict::Certified : Verdict::Failed;
}

void check_condition_i(CmCertificate& cert, const HomologyGroup& hg)
{
    std::vector<KnownClass> known;
    const auto& specs = cert.witnesses;
    for (std::size_t i = 0; i < specs.size(); ++i)
    {
        const InducedRepSpec& s = specs[i].spec;
        known.push_back({class_coordinates(twelve_c2_cocycle(s), hg), 12});
        if (specs[i].index <= 2)
            known.push_back({class_coordinates(two_c2_from_norm(s), hg), 2});
        for (std::size_t j = i; j < specs.size(); ++j)
            known.push_back({class_coordinates(c1c1_exact(s, specs[j].spec), hg), 1});
    }
    std::vector<std::vector<Int>> gens;
    for (const auto& k : known)
        gens.push_back(k.coords);

    const Int order = hg.order();
    cert.span_by_prime.clear();
    bool any_failed = false, any_open = false;
    for (Int p : prime_divisors(order))
    {
        Int cofactor = order;
        while (cofactor % p == 0)
            cofactor /= p;
        bool contained = true;
        for (std::size_t k = 0; k < hg.divisors.size() && contained; ++k)
        {
            std::vector<Int> w(hg.divisors.size(), 0);
            w[k] = checked_mul(cert.m, cofactor);
            contained = express_in_subgroup(gens, hg.divisors, w).has_value();
        }
        Verdict v = Verdict::Certified;
        if (!contained)
        {
            bool exact = true;
            for (const auto& k : known)
                if (k.multiplier % p == 0)
                    exact = false;
            v = exact ? Verdict::Failed : Verdict::Indeterminate;
        }
        any_failed = any_failed || v == Verdict::Failed;
        any_open = any_open || v == Verdict::Indeterminate;
        cert.span_by_prime.push_back({p, v});
    }
    cert.condition_i = any_failed ? Verdict::Failed
                       : any_open ? Verdict::Indeterminate
                                  : Verdict::Certified;
}

}   // namespace

CmCertificate cm_check(const GroupPtr& g, Int m, const std::vector<InducedRepSpec>& candidates,
                       GcdReading reading)
{
    if (m < 1)
        throw std::invalid_argument("cm_check: m must be positive");
    CmCertificate cert;
    cert.group = g;
    cert.m = m;
    cert.reading = reading;
    const HomologyGroup& hg = homology_group(g, 3);
    cert.h3_divisors = hg.divisors;
    for (const auto& spec : candidates)
    {
        require_same_group(*g, *spec.group(), "cm_check");
        spec.validate();
        const Int order = spec.subgroup.order();
        const Int index = spec.subgroup.index();
        const Int d = gcd(order, index);
        CmWitness w{spec, order, index, d, d % m == 0, m % d == 0, std::nullopt};
        if (!w.m_divides_gcd)
            cert.notes.push_back("m does not divide gcd(|H|, [G:H]) = " + std::to_string(w.gcd)
                                 + " for a candidate of order " + std::to_string(w.subgroup_order));
        cert.witnesses.push_back(std::move(w));
    }
    check_condition_i(cert, hg);
    check_condition_ii(cert, hg);
    if (cert.condition_i == Verdict::Failed || cert.condition_ii == Verdict::Failed)
        cert.verdict = Verdict::Failed;
    else if (cert.condition_i == Verdict::Certified && cert.condition_ii == Verdict::Certified)
        cert.verdict = Verdict::Certified;
    else
        cert.verdict = Verdict::Indeterminate;
    return cert;
}

bool revalidate(const CmCertificate& cert)
{
    for (const auto& w : cert.witnesses)
    {
        if (w.gcd != gcd(w.spec.subgroup.order(), w.spec.subgroup.index()))
            return false;
        if (w.kappa)
        {
            if (!is_cocycle(*w.kappa))
                return false;
            QZCochain target = cup(w.spec.phi, bockstein_one(w.spec.phi)) * cert.m;
            if (!classes_equal(restrict_cochain(w.spec.subgroup, *w.kappa), target))
                return false;
        }
    }
    std::vector<InducedRepSpec> specs;
    for (const auto& w : cert.witnesses)
        specs.push_back(w.spec);
    CmCertificate again = cm_check(cert.group, cert.m, specs, cert.reading);
    if (again.verdict != cert.verdict || again.condition_i != cert.condition_i
        || again.condition_ii != cert.condition_ii || again.h3_divisors != cert.h3_divisors)
        return false;
    for (std::size_t i = 0; i < cert.span_by_prime.size(); ++i)
        if (again.span_by_prime[i].p != cert.span_by_prime[i].p
            || again.span_by_prime[i].verdict != cert.span_by_prime[i].verdict)
            return false;
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i)
        if (again.witnesses[i].kappa.has_value() != cert.witnesses[i].kappa.has_value())
            return false;
    return true;
}

SylowReport sylow_reduction(const GroupPtr& g)
{
    SylowReport report;
    report.group = g;
    const HomologyGroup& hg = homology_group(g, 3);
    report.h3_divisors = hg.divisors;
    report.all_surjective = true;
    for (Int p : prime_divisors(g->order()))
    {
        Subgroup sylow = sylow_subgroup(g, static_cast<int>(p));
        const HomologyGroup& hp = homology_group(sylow.as_group(), 3);
        std::vector<std::vector<Int>> gens;
        for (const auto& r : restricted_basis(hg, sylow))
            gens.push_back(class_coordinates(r, hp));
        bool surjective = true;
        for (std::size_t l = 0; l < hp.divisors.size() && surjective; ++l)
        {
            std::vector<Int> e(hp.divisors.size(), 0);
            e[l] = 1;
            surjective = express_in_subgroup(gens, hp.divisors, e).has_value();
        }
        report.all_surjective = report.all_surjective && surjective;
        report.primes.push_back({p, sylow, hp.divisors, surjective});
    }
    return report;
}

Verdict sylow_verdict(const SylowReport& report, const std::vector<CmCertificate>& sylow_certs)
{
    if (sylow_certs.size() != report.primes.size())
        throw std::invalid_argument("sylow_verdict: one certificate per prime expected");
    if (!report.all_surjective)
        return Verdict::Indeterminate;
    Verdict out = Verdict::Certified;
    for (const auto& c : sylow_certs)
    {
        if (c.verdict == Verdict::Failed)
            return Verdict::Failed;
        if (c.verdict == Verdict::Indeterminate)
            out = Verdict::Indeterminate;
    }
    return out;
}

}   // namespace dwinv
