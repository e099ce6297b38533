/**
 * Q/Z 3-cocycles representing multiples of the inverse Bockstein of second
 * Chern classes of induced and virtual representations.
 */
#ifndef DWINV_CHERN_HPP
#define DWINV_CHERN_HPP

#include <utility>
#include <vector>

#include "dwinv/transfer.hpp"

namespace dwinv {

/// Ind_H^G(phi) for a one-dimensional phi: H -> Q/Z.
struct InducedRepSpec
{
    Subgroup subgroup;
    /// 1-cochain on subgroup.as_group(); must be a homomorphism.
    QZCochain phi;

    /// Throws std::invalid_argument if phi is not a homomorphism on H.
    void validate() const;
    const GroupPtr& group() const { return subgroup.parent_ptr(); }
};

/// phi on H given by the values of its members in members() order.
InducedRepSpec induced_rep(const Subgroup& h, const std::vector<QZ>& values);
/// phi(h) = k/n where h is the k-th power of the generator gen of a cyclic H of order n.
InducedRepSpec induced_from_cyclic(const Subgroup& h, Element gen, Int numerator = 1);

/// sum_i n_i Ind(phi_i).
struct VirtualBrauerRep
{
    std::vector<std::pair<Int, InducedRepSpec>> terms;
};

/// 6 (Tr phi u beta Tr phi - Tr(phi u beta phi)); class 12 beta^{-1} c2(Ind phi).
QZCochain twelve_c2_cocycle(const InducedRepSpec& spec);

/// 2 Tr phi u beta Tr phi'; class 2 beta^{-1}(c1(Ind phi) c1(Ind phi')).
QZCochain two_c1c1_cocycle(const InducedRepSpec& spec, const InducedRepSpec& spec2);

/// 6 sum_k n_k ((sum_j n_j Tr phi_j) u beta Tr phi_k - Tr(phi_k u beta phi_k)).
QZCochain twelve_c2_virtual(const VirtualBrauerRep& rep);

/// Sign of the permutation action of G on H\G, as a homomorphism G -> {0, 1/2}.
QZCochain sign_character(const Subgroup& h);

/**
 * Second route through the norm class:
 * 6 beta^{-1}(Phi^* c4) + 12 beta^{-1}(beta(eps) u Tr(beta phi)), where
 * Phi^* c4 is evens_norm_four_cocycle and eps the sign character. The
 * class equals 12 beta^{-1} c2(Ind phi).
 */
QZCochain twelve_c2_evens(const InducedRepSpec& spec);

/**
 * Odd-order part of beta^{-1} c2(Ind phi) from the norm class, valid when
 * c2(Ind 1) has trivial odd part (for instance [G:H] = 2, where
 * Ind 1 = 1 + sign). The multiplier is 2^{-1} modulo the odd part of |G|
 * and 0 modulo its 2-part. Throws std::invalid_argument when [G:H] > 2.
 */
QZCochain odd_part_c2_evens(const InducedRepSpec& spec);

/**
 * u c with u k = 1 mod ord. Requires gcd(k, ord) = 1 and, when verify is
 * set, ord c a coboundary. Throws std::domain_error otherwise.
 */
QZCochain divide_class(const QZCochain& c, Int k, Int ord, bool verify = true);

}   // namespace dwinv

#endif
