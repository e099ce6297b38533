#include "dwinv/chern.hpp"

#include "dwinv/homology.hpp"

namespace dwinv {

namespace {

void require_cocycle(const QZCochain& c, const char* what)
{
    if (!is_cocycle(c))
        throw std::logic_error(std::string(what) + ": result is not a cocycle");
}

/// phi u beta(phi) on H.
QZCochain phi_cup_beta(const QZCochain& phi) { return cup(phi, bockstein_one(phi)); }

}   // namespace

void InducedRepSpec::validate() const
{
    require_same_group(*subgroup.as_group(), phi.group(), "induced representation");
    if (phi.degree() != 1 || !is_homomorphism(phi))
        throw std::invalid_argument("induced representation: phi is not a homomorphism");
}

InducedRepSpec induced_rep(const Subgroup& h, const std::vector<QZ>& values)
{
    if (static_cast<int>(values.size()) != h.order())
        throw std::invalid_argument("induced_rep: one value per subgroup member expected");
    InducedRepSpec spec{h, QZCochain::dense(h.as_group(), 1, values)};
    spec.validate();
    return spec;
}

InducedRepSpec induced_from_cyclic(const Subgroup& h, Element gen, Int numerator)
{
    const FiniteGroup& g = h.parent();
    if (!h.contains(gen) || g.element_order(gen) != h.order())
        throw std::invalid_argument("induced_from_cyclic: gen does not generate the subgroup");
    std::vector<QZ> values(static_cast<std::size_t>(h.order()));
    Element x = g.identity();
    for (int k = 0; k < h.order(); ++k)
    {
        values[h.to_local(x)] = QZ(checked_mul(numerator, k), h.order());
        x = g.mul(x, gen);
    }
    return induced_rep(h, values);
}

QZCochain twelve_c2_cocycle(const InducedRepSpec& spec)
{
    VirtualBrauerRep rep;
    rep.terms.emplace_back(1, spec);
    return twelve_c2_virtual(rep);
}

QZCochain two_c1c1_cocycle(const InducedRepSpec& spec, const InducedRepSpec& spec2)
{
    require_same_group(*spec.group(), *spec2.group(), "two_c1c1_cocycle");
    spec.validate();
    spec2.validate();
    QZCochain tr1 = transfer_cochain(spec.subgroup, spec.phi);
    QZCochain tr2 = transfer_cochain(spec2.subgroup, spec2.phi);
    QZCochain out = cup(tr1, bockstein_one(tr2)) * Int{2};
    require_cocycle(out, "two_c1c1_cocycle");
    return out;
}

QZCochain twelve_c2_virtual(const VirtualBrauerRep& rep)
{
    if (rep.terms.empty())
        throw std::invalid_argument("twelve_c2_virtual: empty representation");
    const GroupPtr& g = rep.terms.front().second.group();
    std::vector<QZCochain> tr;
    for (const auto& [n, spec] : rep.terms)
    {
        require_same_group(*g, *spec.group(), "twelve_c2_virtual");
        spec.validate();
        tr.push_back(transfer_cochain(spec.subgroup, spec.phi));
    }
    QZCochain total = QZCochain::zero(g, 1);
    for (std::size_t j = 0; j < tr.size(); ++j)
        total = total + tr[j] * rep.terms[j].first;

    QZCochain acc = QZCochain::zero(g, 3);
    for (std::size_t k = 0; k < tr.size(); ++k)
    {
        const auto& [n, spec] = rep.terms[k];
        if (n == 0)
            continue;
        QZCochain first = cup(total, bockstein_one(tr[k]));
        QZCochain second = transfer_cochain(spec.subgroup, phi_cup_beta(spec.phi));
        acc = acc + (first - second) * n;
    }
    QZCochain out = acc * Int{6};
    require_cocycle(out, "twelve_c2_virtual");
    return out;
}

QZCochain sign_character(const Subgroup& h)
{
    const FiniteGroup& g = h.parent();
    const int d = h.index();
    std::vector<QZ> values(static_cast<std::size_t>(g.order()));
    for (Element x = 0; x < g.order(); ++x)
    {
        perm::Permutation p(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            p[i] = h.coset_index(g.mul(h.transversal()[i], x));
        values[x] = perm::sign(p) == 1 ? QZ() : QZ(1, 2);
    }
    return QZCochain::dense(h.parent_ptr(), 1, std::move(values));
}

QZCochain twelve_c2_evens(const InducedRepSpec& spec)
{
    spec.validate();
    IntCochain norm = evens_norm_four_cocycle(spec.subgroup, spec.phi);
    IntCochain beps = bockstein_one(sign_character(spec.subgroup));
    IntCochain trb = transfer_cochain(spec.subgroup, bockstein_one(spec.phi));
    IntCochain correction = cup(beps, trb);
    QZCochain out = bockstein_inverse_four(norm, false) * Int{6}
                    + bockstein_inverse_four(correction) * Int{12};
    require_cocycle(out, "twelve_c2_evens");
    return out;
}

QZCochain odd_part_c2_evens(const InducedRepSpec& spec)
{
    spec.validate();
    if (spec.subgroup.index() > 2)
        throw std::invalid_argument("odd_part_c2_evens: requires [G:H] <= 2");
    const Int order = spec.group()->order();
    Int two_part = 1, odd = order;
    while (odd % 2 == 0)
    {
        odd /= 2;
        two_part *= 2;
    }
    // Chinese remainder: u = 2^{-1} mod odd, u = 0 mod two_part.
    Int half = mod_inverse(2, odd);
    Int u = floor_mod(checked_mul(checked_mul(half, two_part), mod_inverse(two_part, odd)), order);
    IntCochain norm = evens_norm_four_cocycle(spec.subgroup, spec.phi);
    QZCochain out = bockstein_inverse_four(norm, false) * u;
    require_cocycle(out, "odd_part_c2_evens");
    return out;
}

QZCochain divide_class(const QZCochain& c, Int k, Int ord, bool verify)
{
    if (ord <= 0)
        throw std::domain_error("divide_class: order must be positive");
    if (gcd(k, ord) != 1)
        throw std::domain_error("divide_class: gcd(" + std::to_string(k) + ", "
                                + std::to_string(ord) + ") != 1");
    if (verify && !is_coboundary(c * ord))
        throw std::domain_error("divide_class: class is not killed by " + std::to_string(ord));
    return c * mod_inverse(k, ord);
}

}   // namespace dwinv
