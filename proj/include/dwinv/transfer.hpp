/**
 * Transfer (corestriction) of cochains along a subgroup, its dual on bar
 * chains, and the degree-4 norm cocycle pulled back along the monomial
 * representation.
 */
#ifndef DWINV_TRANSFER_HPP
#define DWINV_TRANSFER_HPP

#include "dwinv/bockstein.hpp"
#include "dwinv/chains.hpp"
#include "dwinv/groups.hpp"

namespace dwinv {

/**
 * Tr(psi)(s1..sn) = sum_i psi(h_1^i..h_n^i), where the walk starts at the
 * transversal element g_i and h_k^i = t_{k-1} s_k (rep of t_{k-1} s_k)^{-1}.
 * psi lives on h.as_group(); 1 <= degree <= 4.
 */
template <class V>
Cochain<V> transfer_cochain(const Subgroup& h, const Cochain<V>& psi)
{
    require_same_group(*h.as_group(), psi.group(), "transfer");
    const int n = psi.degree();
    if (n < 1 || n > 4)
        throw std::invalid_argument("transfer_cochain: degree must be 1..4");
    const int d = h.index();
    return Cochain<V>::tabulate(h.parent_ptr(), n, [h, psi, n, d](std::span<const Element> t) {
        Element local[kMaxCochainDegree];
        std::span<Element> out(local, static_cast<std::size_t>(n));
        V acc{};
        for (int i = 0; i < d; ++i)
        {
            h.walk(i, t, out);
            acc = add_values(acc, psi(std::span<const Element>(out)));
        }
        return acc;
    });
}

/**
 * Dual of transfer_cochain: each term [s1|s2|s3] contributes [h_1^i|h_2^i|h_3^i]
 * for every transversal index i. The result lives on h.as_group(), and
 * pair(psi, chain_transfer(h, z)) = pair(transfer_cochain(h, psi), z).
 * Throws if z is not a cycle.
 */
BarChain chain_transfer(const Subgroup& h, const BarChain& z);

/// Same walk without the cycle check, any degree.
BarChain chain_transfer_unchecked(const Subgroup& h, const BarChain& z);

/**
 * The integral 4-cochain on G obtained by pulling back the norm cocycle
 * sum_{i != j} c(h1_i, h2_{s1^-1 i}) c(h3_{(s1 s2)^-1 j}, h4_{(s1 s2 s3)^-1 j})
 * on H wr S_d along the monomial representation, with c = bockstein_one(phi).
 * phi must be a homomorphism H -> Q/Z. With verify set, the output is
 * checked to be a cocycle (std::logic_error otherwise).
 */
IntCochain evens_norm_four_cocycle(const Subgroup& h, const QZCochain& phi, bool verify = true);

/// Checks that a Q/Z 1-cochain is a homomorphism.
bool is_homomorphism(const QZCochain& phi);

}   // namespace dwinv

#endif
