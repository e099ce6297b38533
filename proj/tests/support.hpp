// Shared helpers for the test suites: random data and brute-force oracles
// that do not go through the library's own algorithms.
#ifndef DWINV_TESTS_SUPPORT_HPP
#define DWINV_TESTS_SUPPORT_HPP

#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "dwinv/bockstein.hpp"
#include "dwinv/chains.hpp"
#include "dwinv/dw.hpp"
#include "dwinv/homology.hpp"
#include "dwinv/manifolds.hpp"

namespace testing {

using namespace dwinv;
using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi)
{
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline QZCochain random_qz_cochain(const GroupPtr& g, int degree, Int den, Rng& rng)
{
    std::vector<QZ> v(static_cast<std::size_t>(tuple_count(g->order(), degree)));
    for (auto& x : v)
        x = QZ(uniform(rng, 0, den - 1), den);
    return QZCochain::dense(g, degree, std::move(v));
}

inline IntCochain random_int_cochain(const GroupPtr& g, int degree, Int bound, Rng& rng)
{
    std::vector<Int> v(static_cast<std::size_t>(tuple_count(g->order(), degree)));
    for (auto& x : v)
        x = uniform(rng, -bound, bound);
    return IntCochain::dense(g, degree, std::move(v));
}

/// A random Q/Z 3-cocycle: random class plus a random coboundary.
inline QZCochain random_cocycle3(const GroupPtr& g, Rng& rng)
{
    const HomologyGroup& h = homology_group(g, 3);
    QZCochain c = coboundary(random_qz_cochain(g, 2, 12, rng));
    for (std::size_t k = 0; k < h.dual_cocycles.size(); ++k)
        c = c + h.dual_cocycles[k] * uniform(rng, 0, h.divisors[k] - 1);
    return c;
}

/// phi(x) = k * x / n on Z/n.
inline QZCochain cyclic_character(const GroupPtr& zn, Int k)
{
    std::vector<QZ> v(static_cast<std::size_t>(zn->order()));
    for (int x = 0; x < zn->order(); ++x)
        v[x] = QZ(k * x, zn->order());
    return QZCochain::dense(zn, 1, std::move(v));
}

/// sum_{j=1}^n e(q j^2 / n), with the fraction reduced by hand.
inline GroupRingElement lens_formula(Int n, Int q)
{
    GroupRingElement e;
    for (Int j = 1; j <= n; ++j)
    {
        Int num = ((q * j * j) % n + n) % n;
        Int d = std::gcd(num, n);
        e.add(QZ(num / d, n / d));
    }
    return e;
}

/// Generator assignments satisfying every relator, by running through the
/// full product G^k with an independent word evaluator.
inline std::size_t brute_force_hom_count(const Presentation& p, const FiniteGroup& g)
{
    const int n = g.order();
    std::size_t total = 1, count = 0;
    for (int i = 0; i < p.generators; ++i)
        total *= static_cast<std::size_t>(n);
    std::vector<Element> img(static_cast<std::size_t>(p.generators));
    for (std::size_t code = 0; code < total; ++code)
    {
        std::size_t c = code;
        for (auto& x : img)
        {
            x = static_cast<Element>(c % n);
            c /= n;
        }
        bool ok = true;
        for (const auto& w : p.relators)
        {
            Element acc = 0;
            for (int letter : w)
            {
                Element x = img[std::abs(letter) - 1];
                if (letter < 0)
                    for (Element y = 0; y < n; ++y)
                        if (g.mul(x, y) == 0)
                        {
                            x = y;
                            break;
                        }
                acc = g.mul(acc, x);
            }
            ok = ok && acc == 0;
        }
        count += ok ? 1 : 0;
    }
    return count;
}

}   // namespace testing

#endif
