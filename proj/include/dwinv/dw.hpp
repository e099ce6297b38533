/**
 * Dijkgraaf-Witten invariants as elements of the group ring Z[Q/Z], the
 * linking pairing, and the evaluation through finite coverings.
 */
#ifndef DWINV_DW_HPP
#define DWINV_DW_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwinv/manifolds.hpp"

namespace dwinv {

/// A computed identity that should hold failed to hold.
class VerificationError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// sum_a n_a e(a) with nonzero multiplicities, ordered by a in [0, 1).
class GroupRingElement
{
    public:
        void add(const QZ& a, Int multiplicity = 1);

        const std::map<QZ, Int>& terms() const { return terms_; }
        Int multiplicity(const QZ& a) const;
        Int total() const;
        /// e(a) -> e(-a).
        GroupRingElement conjugate() const;

        /// "1 + 2·e(1/3)"; e(0) is written as its multiplicity.
        std::string str() const;

        friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    private:
        std::map<QZ, Int> terms_;
};

/// sum_f e(<f^* psi, [M]>) over Hom(Gamma, G), in enumerate_homs order.
GroupRingElement dw_invariant(const ManifoldModel& m, const GroupPtr& g, const QZCochain& psi);

/// The same sum restricted to the given homomorphisms.
GroupRingElement dw_invariant(const ManifoldModel& m, const QZCochain& psi,
                              const std::vector<GroupHom>& homs);

/// <psi, f_*[M]> for one homomorphism out of Gamma.
QZ evaluate_on_cycle(const ManifoldModel& m, const GroupHom& f, const QZCochain& psi);

/// <f^*(phi1 u beta(phi2)), [M]>.
QZ linking_pairing(const ManifoldModel& m, const GroupHom& f, const QZCochain& phi1,
                   const QZCochain& phi2);

struct CoveringSides
{
    GroupHom f;
    /// m^2 <Tr psi_H, f_*[M]>.
    QZ lhs;
    /// m^2 <psi_H, res(f)_*[M_{f,H}]>.
    QZ rhs;
};

/**
 * Both sides of the covering identity for every f in Hom(Gamma, G).
 * Requires m | gcd(|H|, [G:H]); throws VerificationError when a pair of
 * sides differs.
 */
std::vector<CoveringSides> covering_sides(const ManifoldModel& m, const GroupPtr& g,
                                          const Subgroup& h, const QZCochain& psi_h, Int mult);

/// The left-hand sides of covering_sides aggregated into Z[Q/Z].
GroupRingElement dw_via_covering(const ManifoldModel& m, const GroupPtr& g, const Subgroup& h,
                                 const QZCochain& psi_h, Int mult);

}   // namespace dwinv

#endif
