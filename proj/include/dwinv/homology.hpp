/**
 * Integral homology of finite groups from the bar complex, and deciders for
 * coboundary membership, class equality and class order.
 */
#ifndef DWINV_HOMOLOGY_HPP
#define DWINV_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include "dwinv/chains.hpp"
#include "dwinv/snf.hpp"

namespace dwinv {

/// Largest |G| for which H_3 is computed by default, and the hard ceiling.
inline constexpr int kDefaultSnfCap = 12;
inline constexpr int kHardSnfCap = 16;
/// Largest number of n-tuples accepted by the coboundary decider.
inline constexpr Int kCoboundaryRowBound = 250000;

/// Process-wide |G| cap for homology_group in degree 3 (clamped to kHardSnfCap).
void set_snf_cap(int cap);
int snf_cap();

/// Matrix of d_{n+1}: C_{n+1} -> C_n, rows n-tuples, columns (n+1)-tuples.
SparseMatrix boundary_matrix(const FiniteGroup& g, int n_plus_one);
/// Matrix of delta^n: C^n -> C^{n+1}, rows (n+1)-tuples, columns n-tuples.
SparseMatrix coboundary_matrix(const FiniteGroup& g, int n);

struct HomologyGroup
{
    GroupPtr group;
    int degree = 0;
    /// Nontrivial elementary divisors (all > 1); H_n = sum Z/d_k.
    std::vector<Int> divisors;
    /// Cycle generating the k-th summand, of order divisors[k].
    std::vector<BarChain> generators;
    /// Cocycles with <dual_k, generator_l> = delta_kl / d_k.
    std::vector<QZCochain> dual_cocycles;

    Int order() const;
};

struct HomologyOptions
{
    /// 0 means the process-wide snf_cap().
    int size_cap = 0;
    std::uint64_t shuffle_seed = 0;
};

/// H_n(G; Z) for n in {1, 2, 3}; results for the default options are cached.
const HomologyGroup& homology_group(const GroupPtr& g, int n);
HomologyGroup compute_homology(const GroupPtr& g, int n, const HomologyOptions& opts);

template <class V>
struct CoboundarySolution
{
    bool is_coboundary = false;
    /// b with delta b = c, present when is_coboundary.
    std::optional<Cochain<V>> witness;
};

/// Decides c = delta b over Q/Z (degree 1..3) with a witness.
CoboundarySolution<QZ> solve_coboundary(const QZCochain& c);
/// Decides c = delta b over Z with a witness.
CoboundarySolution<Int> solve_coboundary(const IntCochain& c);

bool is_coboundary(const QZCochain& c);
bool is_coboundary(const IntCochain& c);
bool classes_equal(const QZCochain& a, const QZCochain& b);
bool classes_equal(const IntCochain& a, const IntCochain& b);
/// Smallest k >= 1 with k c a coboundary; 0 if none exists (non-torsion).
Int class_order(const QZCochain& c);

/// <c, z_k> for the generators of H_n(G), n = degree of c.
std::vector<QZ> pairing_fingerprint(const QZCochain& c);
std::vector<QZ> pairing_fingerprint(const QZCochain& c, const HomologyGroup& h);

}   // namespace dwinv

#endif
