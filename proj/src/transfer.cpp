#include "dwinv/transfer.hpp"

namespace dwinv {

BarChain chain_transfer_unchecked(const Subgroup& h, const BarChain& z)
{
    require_same_group(h.parent(), z.group(), "chain_transfer");
    BarChain out(h.as_group(), z.degree());
    Tuple local(static_cast<std::size_t>(z.degree()));
    for (const auto& [t, k] : z.terms())
        for (int i = 0; i < h.index(); ++i)
        {
            h.walk(i, t, local);
            out.add(local, k);
        }
    return out;
}

BarChain chain_transfer(const Subgroup& h, const BarChain& z)
{
    if (!is_cycle(z))
        throw std::invalid_argument("chain_transfer: input is not a cycle");
    return chain_transfer_unchecked(h, z);
}

bool is_homomorphism(const QZCochain& phi)
{
    if (phi.degree() != 1)
        return false;
    const FiniteGroup& g = phi.group();
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            if (phi({g.mul(a, b)}) != phi({a}) + phi({b}))
                return false;
    return true;
}

IntCochain evens_norm_four_cocycle(const Subgroup& h, const QZCochain& phi, bool verify)
{
    require_same_group(*h.as_group(), phi.group(), "evens_norm_four_cocycle");
    if (!is_homomorphism(phi))
        throw std::invalid_argument("evens_norm_four_cocycle: phi is not a homomorphism");

    const int order_h = h.order();
    const int d = h.index();
    const int order_g = h.parent().order();

    auto c1 = std::make_shared<std::vector<Int>>(static_cast<std::size_t>(order_h) * order_h);
    IntCochain bphi = bockstein_one(phi);
    for (Element a = 0; a < order_h; ++a)
        for (Element b = 0; b < order_h; ++b)
            (*c1)[static_cast<std::size_t>(a) * order_h + b] = bphi({a, b});

    // coords[g*d + i] = i-th H-coordinate of Phi(g); sinv[g*d + i] = s_g^{-1}(i).
    MonomialRepresentation rep(h);
    auto coords = std::make_shared<std::vector<Element>>(static_cast<std::size_t>(order_g) * d);
    auto sinv = std::make_shared<std::vector<int>>(static_cast<std::size_t>(order_g) * d);
    for (Element g = 0; g < order_g; ++g)
    {
        const WreathElement& e = rep(g);
        auto inv = perm::inverse(e.perm);
        for (int i = 0; i < d; ++i)
        {
            (*coords)[static_cast<std::size_t>(g) * d + i] = e.coords[i];
            (*sinv)[static_cast<std::size_t>(g) * d + i] = inv[i];
        }
    }

    auto value = [c1, coords, sinv, d, order_h](std::span<const Element> t) {
        auto at = [&](Element g, int i) { return (*coords)[static_cast<std::size_t>(g) * d + i]; };
        auto si = [&](Element g, int i) { return (*sinv)[static_cast<std::size_t>(g) * d + i]; };
        auto c = [&](Element a, Element b) { return (*c1)[static_cast<std::size_t>(a) * order_h + b]; };
        Int sum_a = 0, sum_b = 0, diag = 0;
        for (int i = 0; i < d; ++i)
        {
            int i1 = si(t[0], i);
            Int a = c(at(t[0], i), at(t[1], i1));
            int i2 = si(t[1], i1);
            int i3 = si(t[2], i2);
            Int b = c(at(t[2], i2), at(t[3], i3));
            sum_a += a;
            sum_b += b;
            diag += a * b;
        }
        return sum_a * sum_b - diag;
    };

    IntCochain out = IntCochain::tabulate(h.parent_ptr(), 4, value);
    if (verify && !is_cocycle(out))
        throw std::logic_error("evens_norm_four_cocycle: result is not a cocycle");
    return out;
}

}   // namespace dwinv
