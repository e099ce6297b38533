#include "dwinv/bockstein.hpp"

#include <algorithm>

namespace dwinv {

IntCochain bockstein_one(const QZCochain& phi)
{
    if (phi.degree() != 1)
        throw std::invalid_argument("bockstein_one expects a 1-cochain");
    return IntCochain::tabulate(phi.group_ptr(), 2, [phi](std::span<const Element> t) {
        Rational s = phi({t[0]}).lift() + phi({t[1]}).lift();
        return Int{s >= Rational(1) ? 1 : 0};
    });
}

IntCochain bockstein(const QZCochain& c)
{
    if (!is_cocycle(c))
        throw NotCocycleError("bockstein: input is not a cocycle");
    return to_integer(coboundary(lift(c)));
}

QZCochain bockstein_inverse(const IntCochain& c, bool verify)
{
    if (c.degree() < 2)
        throw std::invalid_argument("bockstein_inverse expects degree >= 2");
    if (verify && !is_cocycle(c))
        throw NotCocycleError("bockstein_inverse: input is not a cocycle");
    GroupPtr g = c.group_ptr();
    const int n = c.degree() - 1;
    const int order = g->order();
    return QZCochain::tabulate(g, n, [c, n, order](std::span<const Element> t) {
        Element u[kMaxCochainDegree];
        std::copy(t.begin(), t.end(), u + 1);
        std::span<const Element> s(u, static_cast<std::size_t>(n + 1));
        Int sum = 0;
        for (Element x = 0; x < order; ++x)
        {
            u[0] = x;
            sum = checked_add(sum, c(s));
        }
        return QZ(sum, order);
    });
}

QZCochain bockstein_inverse_four(const IntCochain& c4, bool verify)
{
    if (c4.degree() != 4)
        throw std::invalid_argument("bockstein_inverse_four expects a 4-cochain");
    return bockstein_inverse(c4, verify);
}

}   // namespace dwinv
