#include "dwinv/dw.hpp"

#include "dwinv/bockstein.hpp"
#include "dwinv/parallel.hpp"
#include "dwinv/transfer.hpp"

namespace dwinv {

void GroupRingElement::add(const QZ& a, Int multiplicity)
{
    if (multiplicity == 0)
        return;
    Int& slot = terms_[a];
    slot = checked_add(slot, multiplicity);
    if (slot == 0)
        terms_.erase(a);
}

Int GroupRingElement::multiplicity(const QZ& a) const
{
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

Int GroupRingElement::total() const
{
    Int t = 0;
    for (const auto& [a, k] : terms_)
        t = checked_add(t, k);
    return t;
}

GroupRingElement GroupRingElement::conjugate() const
{
    GroupRingElement out;
    for (const auto& [a, k] : terms_)
        out.add(-a, k);
    return out;
}

std::string GroupRingElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [a, k] : terms_)
    {
        Int mag = k < 0 ? -k : k;
        if (!out.empty())
            out += k < 0 ? " - " : " + ";
        else if (k < 0)
            out += "-";
        if (a.is_zero())
            out += std::to_string(mag);
        else
            out += (mag == 1 ? "" : std::to_string(mag) + "·") + "e(" + a.str() + ")";
    }
    return out;
}

QZ evaluate_on_cycle(const ManifoldModel& m, const GroupHom& f, const QZCochain& psi)
{
    require_same_group(*m.quotient, f.source(), "evaluate_on_cycle");
    require_same_group(f.target(), psi.group(), "evaluate_on_cycle");
    if (psi.degree() != 3)
        throw std::invalid_argument("evaluate_on_cycle: cochain must have degree 3");
    QZ acc;
    for (const auto& [t, k] : m.fundamental_cycle.terms())
        acc += psi({f(t[0]), f(t[1]), f(t[2])}) * k;
    return acc;
}

GroupRingElement dw_invariant(const ManifoldModel& m, const QZCochain& psi,
                              const std::vector<GroupHom>& homs)
{
    if (psi.degree() != 3 || !is_cocycle(psi))
        throw NotCocycleError("dw_invariant: psi is not a 3-cocycle");
    std::vector<QZ> values(homs.size());
    parallel_for(
        homs.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                values[i] = evaluate_on_cycle(m, homs[i], psi);
        },
        16);
    GroupRingElement out;
    for (const QZ& v : values)
        out.add(v);
    return out;
}

GroupRingElement dw_invariant(const ManifoldModel& m, const GroupPtr& g, const QZCochain& psi)
{
    require_same_group(*g, psi.group(), "dw_invariant");
    return dw_invariant(m, psi, enumerate_homs(m, g));
}

QZ linking_pairing(const ManifoldModel& m, const GroupHom& f, const QZCochain& phi1,
                   const QZCochain& phi2)
{
    if (!is_homomorphism(phi1) || !is_homomorphism(phi2))
        throw std::invalid_argument("linking_pairing: phi is not a homomorphism");
    return evaluate_on_cycle(m, f, cup(phi1, bockstein_one(phi2)));
}

std::vector<CoveringSides> covering_sides(const ManifoldModel& m, const GroupPtr& g,
                                          const Subgroup& h, const QZCochain& psi_h, Int mult)
{
    require_same_group(*g, h.parent(), "dw_via_covering");
    if (mult < 1 || gcd(h.order(), h.index()) % mult != 0)
        throw std::invalid_argument("dw_via_covering: m must divide gcd(|H|, [G:H])");
    if (psi_h.degree() != 3 || !is_cocycle(psi_h))
        throw NotCocycleError("dw_via_covering: psi_H is not a 3-cocycle");
    const Int m2 = checked_mul(mult, mult);
    QZCochain tr = transfer_cochain(h, psi_h);
    std::vector<GroupHom> homs = enumerate_homs(m, g);
    std::vector<QZ> lhs(homs.size()), rhs(homs.size());
    parallel_for(
        homs.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
            {
                const GroupHom& f = homs[i];
                lhs[i] = evaluate_on_cycle(m, f, tr) * m2;
                CoveringData cov = covering_model(m, f, h);
                QZ acc;
                auto res = [&](Element local) {
                    return h.to_local(f(cov.cover_group.from_local(local)));
                };
                for (const auto& [t, k] : cov.cover_cycle.terms())
                    acc += psi_h({res(t[0]), res(t[1]), res(t[2])}) * k;
                rhs[i] = acc * m2;
            }
        },
        4);
    std::vector<CoveringSides> out;
    for (std::size_t i = 0; i < homs.size(); ++i)
    {
        if (lhs[i] != rhs[i])
            throw VerificationError("covering identity fails for homomorphism " + std::to_string(i)
                                    + ": " + lhs[i].str() + " != " + rhs[i].str());
        out.push_back({homs[i], lhs[i], rhs[i]});
    }
    return out;
}

GroupRingElement dw_via_covering(const ManifoldModel& m, const GroupPtr& g, const Subgroup& h,
                                 const QZCochain& psi_h, Int mult)
{
    GroupRingElement out;
    for (const auto& s : covering_sides(m, g, h, psi_h, mult))
        out.add(s.lhs);
    return out;
}

}   // namespace dwinv
