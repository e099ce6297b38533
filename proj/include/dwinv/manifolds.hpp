/**
 * Closed 3-manifolds modelled by a presentation of pi_1, a finite quotient
 * Gamma and a bar-complex 3-cycle on Gamma standing for iota_*[M].
 */
#ifndef DWINV_MANIFOLDS_HPP
#define DWINV_MANIFOLDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dwinv/chains.hpp"
#include "dwinv/groups.hpp"

namespace dwinv {

/// Words are sequences of signed generator indices: +i is generator i
/// (1-based), -i its inverse. An empty relator is the trivial word.
using Word = std::vector<int>;

struct Presentation
{
    int generators = 0;
    std::vector<Word> relators;

    /// Throws std::invalid_argument on out-of-range letters.
    void validate() const;
};

/// The product of the images of the letters of w, left to right.
Element evaluate_word(const FiniteGroup& g, std::span<const Element> images, const Word& w);

struct ManifoldModel
{
    std::string name;
    Presentation presentation;
    GroupPtr quotient;
    /// Image in Gamma of each generator.
    std::vector<Element> projection;
    BarChain fundamental_cycle;
    /// +1 for the constructed orientation, -1 once reversed.
    int orientation = 1;

    /// Checks the relators in Gamma, that the projection is onto and that
    /// the fundamental cycle is a cycle on Gamma.
    void validate() const;
};

/// The same manifold with [M] replaced by -[M].
ManifoldModel reversed(const ManifoldModel& m);

/// L(n, q): Gamma = Z/n and [M] = q sum_{i<n} [g | g^i | g].
ManifoldModel lens_space(int n, Int q);

/// The cycle sum_{i<n} [g | g^i | g] on Z/n, g = 1.
BarChain lens_cycle(const GroupPtr& cyclic, Int q = 1);

struct QuaternionicPinning
{
    int n = 0;
    /// The transfer of [M_n] to <x^2> = Z/n is q times the L(n, 1) cycle.
    Int q = 0;
    /// <phi u beta(phi), transfer to <x> = Z/2n> with phi(x) = 1/2n.
    QZ x_pairing;
    /// Same with <y> = Z/4 and phi(y) = 1/4.
    QZ y_pairing;
    /// Order of the class of [M_n] in H_3(Q_4n) = Z/4n as certified.
    Int certified_order = 0;
};

/**
 * M_n = S^3 / Q_4n with pi_1 = <x, y | x^n y^-2, x y x y^-1>. The cycle is
 * the image of the top generator of the 4-periodic resolution under the
 * comparison map to the bar resolution.
 */
ManifoldModel quaternionic_space_form(int n);

/**
 * Pins a quaternionic model through its abelian coverings; throws
 * std::logic_error when the cycle does not generate H_3(Q_4n).
 */
QuaternionicPinning pin_quaternionic(const ManifoldModel& m, int n);

/// Scale bounds of enumerate_homs.
inline constexpr int kMaxHomGenerators = 4;
inline constexpr int kMaxHomTarget = 360;

/**
 * All generator assignments into g that satisfy every relator, as image
 * tuples in lexicographic order.
 */
std::vector<std::vector<Element>> enumerate_assignments(const Presentation& p, const FiniteGroup& g);

/// Homomorphisms Gamma -> g factoring the presentation, lexicographic in
/// the generator images.
std::vector<GroupHom> enumerate_homs(const ManifoldModel& m, const GroupPtr& g);

/// The homomorphism Gamma -> g sending the generators to images, if any.
std::optional<GroupHom> hom_from_generators(const ManifoldModel& m, const GroupPtr& g,
                                            std::span<const Element> images);

struct CoveringData
{
    ManifoldModel base;
    GroupHom f;
    Subgroup h;
    /// f^{-1}(H) as a subgroup of Gamma.
    Subgroup cover_group;
    /// Transfer of the fundamental cycle to cover_group.
    BarChain cover_cycle;
};

/**
 * The covering of M attached to f^{-1}(H). When the degree-3 homology of
 * Gamma is within the size cap, the pushforward of cover_cycle is checked
 * to pair like [Gamma : f^{-1}(H)] [M].
 */
CoveringData covering_model(const ManifoldModel& m, const GroupHom& f, const Subgroup& h);

}   // namespace dwinv

#endif
