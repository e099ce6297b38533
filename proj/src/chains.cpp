#include "dwinv/chains.hpp"

namespace dwinv {

std::string ring_name(Ring r)
{
    switch (r)
    {
        case Ring::Integer: return "Z";
        case Ring::Rational: return "Q";
        case Ring::QmodZ: return "Q/Z";
    }
    return "?";
}

Int tuple_count(int order, int degree)
{
    Int n = 1;
    for (int k = 0; k < degree; ++k)
        n = checked_mul(n, order);
    return n;
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what)
{
    if (&a != &b)
        throw std::invalid_argument(std::string(what) + ": operands live on different groups");
}

RatCochain lift(const QZCochain& c)
{
    return RatCochain::tabulate(c.group_ptr(), c.degree(),
                                [c](std::span<const Element> t) { return c(t).lift(); });
}

QZCochain reduce_mod_one(const RatCochain& c)
{
    return QZCochain::tabulate(c.group_ptr(), c.degree(),
                               [c](std::span<const Element> t) { return QZ(c(t)); });
}

RatCochain to_rational(const IntCochain& c)
{
    return RatCochain::tabulate(c.group_ptr(), c.degree(),
                                [c](std::span<const Element> t) { return Rational(c(t)); });
}

IntCochain to_integer(const RatCochain& c)
{
    return IntCochain::tabulate(c.group_ptr(), c.degree(), [c](std::span<const Element> t) {
        Rational v = c(t);
        if (!v.is_integer())
            throw std::domain_error("cochain value " + v.str() + " is not an integer");
        return v.num();
    });
}

QZCochain divide_into_qz(const IntCochain& c, Int k)
{
    if (k == 0)
        throw std::domain_error("divide_into_qz: division by zero");
    return QZCochain::tabulate(c.group_ptr(), c.degree(),
                               [c, k](std::span<const Element> t) { return QZ(c(t), k); });
}

// ---------------------------------------------------------------- BarChain

BarChain::BarChain(GroupPtr g, int degree) : group_(std::move(g)), degree_(degree)
{
    if (degree < 0)
        throw std::invalid_argument("chain degree must be non-negative");
}

Int BarChain::coefficient(const Tuple& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
}

void BarChain::add(const Tuple& t, Int coeff)
{
    if (static_cast<int>(t.size()) != degree_)
        throw std::invalid_argument("chain term has the wrong length");
    for (Element g : t)
        if (g < 0 || g >= group_->order())
            throw std::invalid_argument("chain term entry out of range");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted)
    {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    }
}

BarChain& BarChain::operator+=(const BarChain& o)
{
    require_same_group(*group_, *o.group_, "chain sum");
    if (degree_ != o.degree_)
        throw std::invalid_argument("chain sum: degree mismatch");
    for (const auto& [t, k] : o.terms_)
        add(t, k);
    return *this;
}

BarChain operator*(Int k, const BarChain& a)
{
    BarChain r(a.group_, a.degree_);
    if (k == 0)
        return r;
    for (const auto& [t, c] : a.terms_)
        r.terms_.emplace(t, checked_mul(k, c));
    return r;
}

BarChain boundary(const BarChain& z)
{
    const int n = z.degree();
    if (n < 1)
        throw std::invalid_argument("boundary of a degree-0 chain");
    BarChain out(z.group_ptr(), n - 1);
    if (n == 1)
        return out;
    const FiniteGroup& g = z.group();
    Tuple face(static_cast<std::size_t>(n - 1));
    for (const auto& [t, k] : z.terms())
    {
        out.add(Tuple(t.begin() + 1, t.end()), k);
        for (int i = 1; i < n; ++i)
        {
            for (int a = 0, src = 0; a < n - 1; ++a, ++src)
            {
                if (src == i - 1)
                {
                    face[a] = g.mul(t[src], t[src + 1]);
                    ++src;
                }
                else
                {
                    face[a] = t[src];
                }
            }
            out.add(face, i % 2 ? -k : k);
        }
        out.add(Tuple(t.begin(), t.end() - 1), n % 2 ? -k : k);
    }
    return out;
}

bool is_cycle(const BarChain& z) { return z.degree() < 1 || boundary(z).empty(); }

BarChain pushforward_chain(const GroupHom& f, const BarChain& z)
{
    require_same_group(f.source(), z.group(), "pushforward");
    BarChain out(f.target_ptr(), z.degree());
    Tuple u(static_cast<std::size_t>(z.degree()));
    for (const auto& [t, k] : z.terms())
    {
        for (std::size_t i = 0; i < t.size(); ++i)
            u[i] = f(t[i]);
        out.add(u, k);
    }
    return out;
}

}   // namespace dwinv
