/**
 * Finite groups as multiplication tables, subgroups with a fixed coset
 * transversal, homomorphisms, wreath products and the monomial
 * representation G -> H wr S_d.
 *
 * Every group has its identity at index 0. Groups are immutable and are
 * shared through GroupPtr, so cochains and chains can keep their group alive.
 */
#ifndef DWINV_GROUPS_HPP
#define DWINV_GROUPS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dwinv/arith.hpp"

namespace dwinv {

using Element = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Largest order for which a multiplication table is materialized.
inline constexpr Int kEagerGroupBound = 4096;

/// Raised when a construction would exceed a configured size bound.
class SizeBoundError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

class FiniteGroup
{
    public:
        /**
         * Builds a group from a row-major table, table[a * order + b] = ab.
         *
         * Validates that 0 is a two-sided identity, that every row and
         * column is a permutation, and associativity (exhaustively up to
         * order 48, on a fixed pseudo-random sample of triples above).
         */
        static GroupPtr from_table(int order, std::vector<Element> table,
                                   std::vector<std::string> labels = {}, std::string name = {});

        int order() const { return order_; }
        Element identity() const { return 0; }
        Element mul(Element a, Element b) const
        {
            return table_[static_cast<std::size_t>(a) * order_ + b];
        }
        Element inv(Element a) const { return inv_[a]; }
        Element pow(Element a, Int k) const;
        int element_order(Element a) const;
        bool is_abelian() const;

        const std::string& name() const { return name_; }
        std::string label(Element a) const;
        std::span<const Element> table() const { return table_; }

    private:
        FiniteGroup() = default;

        int order_ = 0;
        std::vector<Element> table_;
        std::vector<Element> inv_;
        std::vector<std::string> labels_;
        std::string name_;
};

/// Z/n with k at index k.
GroupPtr make_cyclic(int n);
/// D_n = Z/n x| Z/2 of order 2n; r^a s^b sits at index a + n*b.
GroupPtr make_dihedral(int n);
/// Q_4n = <x, y | x^n = y^2, xyx = y>; x^a y^b sits at index a + 2n*b.
GroupPtr make_quaternion(int n);
/// S_d, permutations in lexicographic rank of their one-line form; the
/// product is composition, (s t)(i) = s(t(i)).
GroupPtr make_symmetric(int d);
/**
 * SL_2(F_q) for an odd prime q <= 7. The identity is index 0; the other
 * matrices follow in row-major lexicographic order of (a, b, c, d).
 */
GroupPtr make_sl2(int q);

/// Permutations of {0..d-1} in one-line notation.
namespace perm {
using Permutation = std::vector<int>;
Permutation identity(int d);
/// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
/// +1 for even, -1 for odd.
int sign(const Permutation& a);
Int rank(const Permutation& a);
Permutation unrank(Int r, int d);
Int factorial(int d);
}   // namespace perm

class GroupHom;

/**
 * A subgroup H of G with a right-coset transversal T = {g_i}, g_0 = 1.
 *
 * Cosets are H*sigma. For sigma in G the representative sigma-bar is the
 * element of T in H*sigma, and the H-component is sigma * sigma-bar^{-1}.
 */
class Subgroup
{
    public:
        /// Closure of the generators; transversal chosen greedily by
        /// smallest unassigned element index.
        static Subgroup generated_by(GroupPtr parent, std::span<const Element> gens);
        static Subgroup from_members(GroupPtr parent, std::vector<Element> members);
        static Subgroup whole(GroupPtr parent);
        static Subgroup trivial(GroupPtr parent);

        /// Same subgroup with another transversal; reps[0] must be the identity.
        Subgroup with_transversal(std::vector<Element> reps) const;

        const FiniteGroup& parent() const { return *parent_; }
        const GroupPtr& parent_ptr() const { return parent_; }
        std::span<const Element> members() const { return members_; }
        int order() const { return static_cast<int>(members_.size()); }
        int index() const { return static_cast<int>(transversal_.size()); }
        bool contains(Element g) const { return local_[g] >= 0; }

        std::span<const Element> transversal() const { return transversal_; }
        int coset_index(Element sigma) const { return coset_[sigma]; }
        Element representative(Element sigma) const { return transversal_[coset_[sigma]]; }
        Element h_component(Element sigma) const;

        /// Index of h inside as_group(); h must be a member.
        Element to_local(Element h) const;
        Element from_local(Element local) const { return members_[local]; }
        /// H as a group in its own right, elements in members() order.
        const GroupPtr& as_group() const { return local_group_; }
        GroupHom inclusion() const;

        /**
         * Coset walk used by transfers: starting from t_0 = g_start, for
         * each sigma_k records h_k = t_{k-1} sigma_k (t_k)^{-1} in local
         * indices, where t_k is the representative of t_{k-1} sigma_k.
         * Returns the final coset index.
         */
        int walk(int start, std::span<const Element> sigmas, std::span<Element> out_local) const;

    private:
        Subgroup() = default;
        void build(std::vector<Element> reps);

        GroupPtr parent_;
        std::vector<Element> members_;
        std::vector<int> local_;
        std::vector<Element> transversal_;
        std::vector<int> coset_;
        GroupPtr local_group_;
};

class GroupHom
{
    public:
        /// Validates f(xy) = f(x)f(y) for all pairs.
        static GroupHom from_images(GroupPtr source, GroupPtr target, std::vector<Element> image);
        static GroupHom identity(GroupPtr g);

        Element operator()(Element x) const { return image_[x]; }
        const FiniteGroup& source() const { return *source_; }
        const FiniteGroup& target() const { return *target_; }
        const GroupPtr& source_ptr() const { return source_; }
        const GroupPtr& target_ptr() const { return target_; }
        std::span<const Element> images() const { return image_; }

        /// other o this.
        GroupHom then(const GroupHom& other) const;
        bool is_surjective() const;
        std::vector<Element> image_set() const;

    private:
        GroupHom() = default;
        GroupPtr source_;
        GroupPtr target_;
        std::vector<Element> image_;
};

/// A Sylow p-subgroup, grown one normalizing p-element at a time.
Subgroup sylow_subgroup(GroupPtr g, int p);

/**
 * Element of base^d x| S_d: coordinates are base-group indices, perm is a
 * one-line permutation.
 */
struct WreathElement
{
    std::vector<Element> coords;
    perm::Permutation perm;
    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/**
 * The wreath product base wr S_d evaluated on demand.
 *
 * Multiplication (h, s)(h', s') = (h * s(h'), s o s') with
 * s(h')_i = h'_{s^{-1}(i)}.
 */
class WreathProduct
{
    public:
        WreathProduct(GroupPtr base, int degree);

        const FiniteGroup& base() const { return *base_; }
        const GroupPtr& base_ptr() const { return base_; }
        int degree() const { return degree_; }
        Int order() const;

        WreathElement identity() const;
        WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
        WreathElement inverse(const WreathElement& a) const;

        /// rank(perm) * |base|^d + sum_i coords[i] * |base|^i.
        Int index_of(const WreathElement& e) const;
        WreathElement element(Int index) const;

        /// Full table; throws SizeBoundError above kEagerGroupBound.
        GroupPtr materialize() const;

    private:
        GroupPtr base_;
        int degree_;
};

GroupPtr make_wreath(GroupPtr base, int d);

/**
 * The monomial representation Phi: G -> H wr S_{[G:H]} attached to a
 * subgroup and its transversal. Phi(g) has coordinates
 * h_i = g_i g (rep of g_i g)^{-1} and permutation s with
 * s^{-1}(i) = coset index of g_i g. The homomorphism property is verified
 * at construction.
 */
class MonomialRepresentation
{
    public:
        explicit MonomialRepresentation(const Subgroup& h);

        const Subgroup& subgroup() const { return subgroup_; }
        const WreathProduct& wreath() const { return wreath_; }
        const WreathElement& operator()(Element g) const { return images_[g]; }
        /// Phi as a table homomorphism into the materialized wreath product.
        GroupHom as_hom() const;

    private:
        Subgroup subgroup_;
        WreathProduct wreath_;
        std::vector<WreathElement> images_;
};

MonomialRepresentation monomial_representation(const Subgroup& h);

}   // namespace dwinv

#endif
