/**
 * Cochains and chains of the (unnormalized, non-homogeneous) bar complex of a
 * finite group, with coboundary, boundary, Alexander-Whitney cup products,
 * the chain/cochain pairing and functoriality along homomorphisms.
 *
 * A degree-n cochain is indexed by the flat index sum_k g_k |G|^(k-1), so
 * g_1 is the least significant digit.
 */
#ifndef DWINV_CHAINS_HPP
#define DWINV_CHAINS_HPP

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "dwinv/arith.hpp"
#include "dwinv/groups.hpp"
#include "dwinv/parallel.hpp"

namespace dwinv {

/// Cochains with more entries than this are evaluated lazily.
inline constexpr Int kDenseCochainBound = Int{1} << 24;
inline constexpr int kMaxCochainDegree = 5;

enum class Ring
{
    Integer,
    Rational,
    QmodZ
};

template <class V> struct RingOf;
template <> struct RingOf<Int> { static constexpr Ring value = Ring::Integer; };
template <> struct RingOf<Rational> { static constexpr Ring value = Ring::Rational; };
template <> struct RingOf<QZ> { static constexpr Ring value = Ring::QmodZ; };

std::string ring_name(Ring r);

/// |G|^n, throwing OverflowError if it does not fit.
Int tuple_count(int order, int degree);

/// Writes the tuple with the given flat index into out.
inline void decode_tuple(Int flat, int order, std::span<Element> out)
{
    for (auto& g : out)
    {
        g = static_cast<Element>(flat % order);
        flat /= order;
    }
}

inline Int encode_tuple(std::span<const Element> tuple, int order)
{
    Int flat = 0;
    for (std::size_t k = tuple.size(); k-- > 0;)
        flat = flat * order + tuple[k];
    return flat;
}

template <class V>
class Cochain
{
    public:
        using Value = V;
        using Evaluator = std::function<V(std::span<const Element>)>;

        Cochain() = default;

        static Cochain zero(GroupPtr g, int degree)
        {
            return lazy(std::move(g), degree, [](std::span<const Element>) { return V{}; });
        }

        static Cochain dense(GroupPtr g, int degree, std::vector<V> values)
        {
            check_degree(degree);
            if (static_cast<Int>(values.size()) != tuple_count(g->order(), degree))
                throw std::invalid_argument("dense cochain has the wrong number of values");
            Cochain c;
            c.group_ = std::move(g);
            c.degree_ = degree;
            c.dense_ = std::make_shared<const std::vector<V>>(std::move(values));
            return c;
        }

        static Cochain lazy(GroupPtr g, int degree, Evaluator f)
        {
            check_degree(degree);
            Cochain c;
            c.group_ = std::move(g);
            c.degree_ = degree;
            c.lazy_ = std::make_shared<const Evaluator>(std::move(f));
            return c;
        }

        /**
         * Dense table of f over all tuples when it fits under
         * kDenseCochainBound, a lazy wrapper of f otherwise. Evaluation runs
         * in parallel; f must be safe to call concurrently.
         */
        template <class F>
        static Cochain tabulate(GroupPtr g, int degree, F f)
        {
            check_degree(degree);
            Int count = tuple_count(g->order(), degree);
            if (count > kDenseCochainBound)
                return lazy(std::move(g), degree, Evaluator(std::move(f)));
            std::vector<V> values(static_cast<std::size_t>(count));
            const int order = g->order();
            parallel_for(values.size(), [&](std::size_t begin, std::size_t end) {
                std::vector<Element> t(degree);
                for (std::size_t i = begin; i < end; ++i)
                {
                    decode_tuple(static_cast<Int>(i), order, t);
                    values[i] = f(std::span<const Element>(t));
                }
            });
            return dense(std::move(g), degree, std::move(values));
        }

        const FiniteGroup& group() const { return *group_; }
        const GroupPtr& group_ptr() const { return group_; }
        int degree() const { return degree_; }
        static constexpr Ring ring() { return RingOf<V>::value; }
        bool is_dense() const { return dense_ != nullptr; }
        Int size() const { return tuple_count(group_->order(), degree_); }

        V operator()(std::span<const Element> tuple) const
        {
            if (dense_)
                return (*dense_)[static_cast<std::size_t>(encode_tuple(tuple, group_->order()))];
            return (*lazy_)(tuple);
        }
        V operator()(std::initializer_list<Element> tuple) const
        {
            return (*this)(std::span<const Element>(tuple.begin(), tuple.size()));
        }
        V at_flat(Int flat) const
        {
            if (dense_)
                return (*dense_)[static_cast<std::size_t>(flat)];
            Element t[kMaxCochainDegree];
            std::span<Element> s(t, static_cast<std::size_t>(degree_));
            decode_tuple(flat, group_->order(), s);
            return (*lazy_)(s);
        }

        /// Dense copy; throws SizeBoundError above kDenseCochainBound.
        Cochain materialized() const
        {
            if (dense_)
                return *this;
            if (size() > kDenseCochainBound)
                throw SizeBoundError("cochain too large to materialize");
            auto f = lazy_;
            return tabulate(group_, degree_, [f](std::span<const Element> t) { return (*f)(t); });
        }

        std::span<const V> values() const
        {
            if (!dense_)
                throw std::logic_error("values() on a lazy cochain");
            return *dense_;
        }

    private:
        static void check_degree(int degree)
        {
            if (degree < 0 || degree > kMaxCochainDegree)
                throw std::invalid_argument("cochain degree out of range");
        }

        GroupPtr group_;
        int degree_ = 0;
        std::shared_ptr<const std::vector<V>> dense_;
        std::shared_ptr<const Evaluator> lazy_;
};

using IntCochain = Cochain<Int>;
using RatCochain = Cochain<Rational>;
using QZCochain = Cochain<QZ>;

// ---------------------------------------------------------- value pairing

inline Int pair_values(Int a, Int b) { return checked_mul(a, b); }
inline QZ pair_values(Int a, const QZ& b) { return b * a; }
inline QZ pair_values(const QZ& a, Int b) { return a * b; }
inline Rational pair_values(const Rational& a, Int b) { return a * b; }
inline Rational pair_values(Int a, const Rational& b) { return b * a; }
inline Rational pair_values(const Rational& a, const Rational& b) { return a * b; }

inline Int add_values(Int a, Int b) { return checked_add(a, b); }
inline QZ add_values(const QZ& a, const QZ& b) { return a + b; }
inline Rational add_values(const Rational& a, const Rational& b) { return a + b; }

inline Int scale_value(Int a, Int k) { return checked_mul(a, k); }
inline QZ scale_value(const QZ& a, Int k) { return a * k; }
inline Rational scale_value(const Rational& a, Int k) { return a * k; }

inline bool is_zero_value(Int a) { return a == 0; }
inline bool is_zero_value(const QZ& a) { return a.is_zero(); }
inline bool is_zero_value(const Rational& a) { return a.num() == 0; }

// ----------------------------------------------------- pointwise algebra

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what);

template <class V>
Cochain<V> operator+(const Cochain<V>& a, const Cochain<V>& b)
{
    require_same_group(a.group(), b.group(), "cochain sum");
    if (a.degree() != b.degree())
        throw std::invalid_argument("cochain sum: degree mismatch");
    return Cochain<V>::tabulate(a.group_ptr(), a.degree(), [a, b](std::span<const Element> t) {
        return add_values(a(t), b(t));
    });
}

template <class V>
Cochain<V> operator*(const Cochain<V>& a, Int k)
{
    return Cochain<V>::tabulate(a.group_ptr(), a.degree(), [a, k](std::span<const Element> t) {
        return scale_value(a(t), k);
    });
}

template <class V>
Cochain<V> operator*(Int k, const Cochain<V>& a)
{
    return a * k;
}

template <class V>
Cochain<V> operator-(const Cochain<V>& a)
{
    return a * Int{-1};
}

template <class V>
Cochain<V> operator-(const Cochain<V>& a, const Cochain<V>& b)
{
    return a + (-b);
}

/// Pointwise equality over all tuples.
template <class V>
bool equal_pointwise(const Cochain<V>& a, const Cochain<V>& b)
{
    if (&a.group() != &b.group() || a.degree() != b.degree())
        return false;
    const Int n = a.size();
    for (Int i = 0; i < n; ++i)
        if (!(a.at_flat(i) == b.at_flat(i)))
            return false;
    return true;
}

template <class V>
bool is_zero(const Cochain<V>& a)
{
    const Int n = a.size();
    for (Int i = 0; i < n; ++i)
        if (!is_zero_value(a.at_flat(i)))
            return false;
    return true;
}

// --------------------------------------------------------- differentials

/// (dc)(g1..g_{n+1}) = c(g2..) + sum_i (-1)^i c(..g_i g_{i+1}..) + (-1)^{n+1} c(g1..g_n).
template <class V>
Cochain<V> coboundary(const Cochain<V>& c)
{
    const int n = c.degree();
    if (n + 1 > kMaxCochainDegree)
        throw std::invalid_argument("coboundary: degree too large");
    GroupPtr g = c.group_ptr();
    return Cochain<V>::tabulate(g, n + 1, [c, g, n](std::span<const Element> t) {
        Element face[kMaxCochainDegree];
        std::span<const Element> f(face, static_cast<std::size_t>(n));
        V acc = c(t.subspan(1));
        for (int i = 1; i <= n; ++i)
        {
            for (int k = 0, src = 0; k < n; ++k, ++src)
            {
                if (src == i - 1)
                {
                    face[k] = g->mul(t[src], t[src + 1]);
                    ++src;
                }
                else
                {
                    face[k] = t[src];
                }
            }
            V v = c(f);
            acc = add_values(acc, i % 2 ? scale_value(v, -1) : v);
        }
        V last = c(t.first(static_cast<std::size_t>(n)));
        return add_values(acc, (n + 1) % 2 ? scale_value(last, -1) : last);
    });
}

template <class V>
bool is_cocycle(const Cochain<V>& c)
{
    return is_zero(coboundary(c));
}

/// Alexander-Whitney cup product (a u b)(g1..g_{p+q}) = a(g1..g_p) * b(g_{p+1}..).
template <class A, class B>
auto cup(const Cochain<A>& a, const Cochain<B>& b)
{
    using R = decltype(pair_values(std::declval<A>(), std::declval<B>()));
    require_same_group(a.group(), b.group(), "cup");
    const auto p = static_cast<std::size_t>(a.degree());
    return Cochain<R>::tabulate(a.group_ptr(), a.degree() + b.degree(),
                                [a, b, p](std::span<const Element> t) {
                                    return pair_values(a(t.first(p)), b(t.subspan(p)));
                                });
}

// ----------------------------------------------------------- conversions

/// The canonical [0,1) lift of a Q/Z cochain.
RatCochain lift(const QZCochain& c);
/// Reduction Q -> Q/Z.
QZCochain reduce_mod_one(const RatCochain& c);
/// Z -> Q.
RatCochain to_rational(const IntCochain& c);
/// Q -> Z; throws std::domain_error on a non-integral value.
IntCochain to_integer(const RatCochain& c);
/// Z -> Q/Z after dividing by k: x -> x/k mod 1.
QZCochain divide_into_qz(const IntCochain& c, Int k);

/// Precomposition with f: (f^* c)(g..) = c(f(g)..).
template <class V>
Cochain<V> pullback_cochain(const GroupHom& f, const Cochain<V>& c)
{
    require_same_group(f.target(), c.group(), "pullback");
    const int n = c.degree();
    auto image = std::make_shared<std::vector<Element>>(f.images().begin(), f.images().end());
    return Cochain<V>::tabulate(f.source_ptr(), n, [c, image, n](std::span<const Element> t) {
        Element u[kMaxCochainDegree];
        for (int k = 0; k < n; ++k)
            u[k] = (*image)[t[k]];
        return c(std::span<const Element>(u, static_cast<std::size_t>(n)));
    });
}

/// Restriction to a subgroup, as a cochain on H.as_group().
template <class V>
Cochain<V> restrict_cochain(const Subgroup& h, const Cochain<V>& c)
{
    return pullback_cochain(h.inclusion(), c);
}

// ---------------------------------------------------------------- chains

using Tuple = std::vector<Element>;

/**
 * A formal integer combination of bar tuples [g1|..|gn]. Terms are kept
 * sorted by tuple with zero coefficients removed.
 */
class BarChain
{
    public:
        BarChain(GroupPtr g, int degree);

        const FiniteGroup& group() const { return *group_; }
        const GroupPtr& group_ptr() const { return group_; }
        int degree() const { return degree_; }
        const std::map<Tuple, Int>& terms() const { return terms_; }
        bool empty() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }
        Int coefficient(const Tuple& t) const;

        void add(const Tuple& t, Int coeff);

        BarChain& operator+=(const BarChain& o);
        friend BarChain operator+(BarChain a, const BarChain& b) { return a += b; }
        friend BarChain operator*(Int k, const BarChain& a);
        friend BarChain operator-(const BarChain& a) { return Int{-1} * a; }
        friend BarChain operator-(const BarChain& a, const BarChain& b) { return a + (-b); }
        friend bool operator==(const BarChain& a, const BarChain& b)
        {
            return &a.group() == &b.group() && a.degree_ == b.degree_ && a.terms_ == b.terms_;
        }

    private:
        GroupPtr group_;
        int degree_;
        std::map<Tuple, Int> terms_;
};

/// d[g1|..|gn] = [g2|..] + sum_i (-1)^i [..|g_i g_{i+1}|..] + (-1)^n [g1|..|g_{n-1}];
/// zero in degree 1.
BarChain boundary(const BarChain& z);
bool is_cycle(const BarChain& z);

template <class V>
V pair(const Cochain<V>& c, const BarChain& z)
{
    require_same_group(c.group(), z.group(), "pair");
    if (c.degree() != z.degree())
        throw std::invalid_argument("pair: degree mismatch");
    V acc{};
    for (const auto& [t, k] : z.terms())
        acc = add_values(acc, scale_value(c(std::span<const Element>(t)), k));
    return acc;
}

BarChain pushforward_chain(const GroupHom& f, const BarChain& z);

}   // namespace dwinv

#endif
