/**
 * Checks of the type C_m condition on small groups, and the Sylow
 * reduction through restriction maps on H^3(-; Q/Z).
 */
#ifndef DWINV_CMTYPE_HPP
#define DWINV_CMTYPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dwinv/chern.hpp"
#include "dwinv/homology.hpp"

namespace dwinv {

enum class Verdict
{
    Certified,
    Failed,
    Indeterminate
};

std::string verdict_name(Verdict v);

/**
 * How the gcd clause of condition (ii) is read. Literal: m divides
 * gcd(|H|, [G:H]). Dividing: gcd(|H|, [G:H]) divides m, the reading under
 * which the dihedral examples hold; the covering identity then applies to
 * (m / gcd) phi u beta(phi).
 */
enum class GcdReading
{
    Literal,
    Dividing
};

struct CmWitness
{
    InducedRepSpec spec;
    Int subgroup_order = 0;
    Int index = 0;
    Int gcd = 0;
    bool m_divides_gcd = false;
    bool gcd_divides_m = false;
    /// Class on G with res(kappa) = m phi u beta(phi), when one exists.
    std::optional<QZCochain> kappa;
};

struct PrimeSpan
{
    Int p = 0;
    Verdict verdict = Verdict::Indeterminate;
};

struct CmCertificate
{
    GroupPtr group;
    Int m = 0;
    GcdReading reading = GcdReading::Dividing;
    /// H^3(G; Q/Z) = sum Z/d_k.
    std::vector<Int> h3_divisors;
    std::vector<CmWitness> witnesses;
    /// Condition (i), per prime dividing |H^3|.
    std::vector<PrimeSpan> span_by_prime;
    Verdict condition_i = Verdict::Indeterminate;
    Verdict condition_ii = Verdict::Indeterminate;
    Verdict verdict = Verdict::Indeterminate;
    std::vector<std::string> notes;
};

/**
 * Condition (i): the subgroup of H^3(G; Q/Z) generated by known multiples of
 * beta^{-1} of the degree-4 Chern subring (12 c2 and c1 c1 for every
 * candidate, and 2 c2 from the norm class for candidates of index <= 2)
 * must contain m H^3. Decided per prime; a prime where only non-invertible
 * multiples are known and containment fails is Indeterminate.
 *
 * Condition (ii): the gcd clause under the chosen reading, and a class kappa
 * on G with res(kappa) = m phi u beta(phi), found by solving the linear
 * system of restricted H^3 generators.
 */
CmCertificate cm_check(const GroupPtr& g, Int m, const std::vector<InducedRepSpec>& candidates,
                       GcdReading reading = GcdReading::Dividing);

/// Recomputes every field of the certificate through the homology deciders.
bool revalidate(const CmCertificate& cert);

/// Coordinates of a Q/Z class in sum Z/d_k given its pairing fingerprint.
std::vector<Int> class_coordinates(const QZCochain& c, const HomologyGroup& h);

struct SylowRestriction
{
    Int p = 0;
    Subgroup sylow;
    std::vector<Int> sylow_h3_divisors;
    bool surjective = false;
};

struct SylowReport
{
    GroupPtr group;
    std::vector<Int> h3_divisors;
    std::vector<SylowRestriction> primes;
    bool all_surjective = false;
};

/// Restriction H^3(G; Q/Z) -> H^3(P; Q/Z) for one Sylow P per prime.
SylowReport sylow_reduction(const GroupPtr& g);

/**
 * Combines sylow_reduction with one certificate per Sylow subgroup (each
 * computed on the Sylow subgroup as a group): Certified when every
 * restriction is surjective and every Sylow certificate is Certified.
 */
Verdict sylow_verdict(const SylowReport& report, const std::vector<CmCertificate>& sylow_certs);

}   // namespace dwinv

#endif
