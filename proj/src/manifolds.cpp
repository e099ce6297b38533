#include "dwinv/manifolds.hpp"

#include <map>
#include <numeric>

#include "dwinv/bockstein.hpp"
#include "dwinv/homology.hpp"
#include "dwinv/parallel.hpp"
#include "dwinv/transfer.hpp"

namespace dwinv {

void Presentation::validate() const
{
    if (generators < 0)
        throw std::invalid_argument("presentation: negative generator count");
    for (const auto& w : relators)
        for (int letter : w)
            if (letter == 0 || std::abs(letter) > generators)
                throw std::invalid_argument("presentation: letter " + std::to_string(letter)
                                            + " out of range");
}

Element evaluate_word(const FiniteGroup& g, std::span<const Element> images, const Word& w)
{
    Element acc = g.identity();
    for (int letter : w)
    {
        Element x = images[std::abs(letter) - 1];
        acc = g.mul(acc, letter > 0 ? x : g.inv(x));
    }
    return acc;
}

void ManifoldModel::validate() const
{
    presentation.validate();
    if (!quotient)
        throw std::invalid_argument("manifold: missing quotient group");
    if (static_cast<int>(projection.size()) != presentation.generators)
        throw std::invalid_argument("manifold: one projection image per generator expected");
    for (Element x : projection)
        if (x < 0 || x >= quotient->order())
            throw std::invalid_argument("manifold: projection image out of range");
    for (const auto& w : presentation.relators)
        if (evaluate_word(*quotient, projection, w) != quotient->identity())
            throw std::invalid_argument("manifold: projection does not respect a relator");
    std::vector<Element> gens(projection.begin(), projection.end());
    if (Subgroup::generated_by(quotient, gens).order() != quotient->order())
        throw std::invalid_argument("manifold: projection is not onto the quotient");
    require_same_group(*quotient, fundamental_cycle.group(), "manifold");
    if (fundamental_cycle.degree() != 3 || !is_cycle(fundamental_cycle))
        throw std::invalid_argument("manifold: fundamental class is not a 3-cycle");
}

ManifoldModel reversed(const ManifoldModel& m)
{
    ManifoldModel out = m;
    out.fundamental_cycle = -m.fundamental_cycle;
    out.orientation = -m.orientation;
    return out;
}

BarChain lens_cycle(const GroupPtr& cyclic, Int q)
{
    const int n = cyclic->order();
    BarChain z(cyclic, 3);
    const Element g = n > 1 ? 1 : 0;
    for (int i = 0; i < n; ++i)
        z.add({g, cyclic->pow(g, i), g}, q);
    return z;
}

ManifoldModel lens_space(int n, Int q)
{
    if (n < 1)
        throw std::invalid_argument("lens_space: n must be positive");
    if (gcd(q, n) != 1)
        throw std::invalid_argument("lens_space: gcd(q, n) must be 1");
    GroupPtr g = make_cyclic(n);
    ManifoldModel m{"L(" + std::to_string(n) + "," + std::to_string(q) + ")",
                    Presentation{1, {Word(static_cast<std::size_t>(n), 1)}},
                    g,
                    {n > 1 ? 1 : 0},
                    lens_cycle(g, q)};
    m.validate();
    return m;
}

namespace {

/// Chains of the bar resolution: g0 [g1 | .. | gk] -> coefficient.
using ResChain = std::map<std::pair<Element, Tuple>, Int>;
using GroupRingTerms = std::vector<std::pair<Int, Element>>;

ResChain act(const FiniteGroup& g, const GroupRingTerms& r, const ResChain& c)
{
    ResChain out;
    for (const auto& [k, e] : r)
        for (const auto& [key, v] : c)
            out[{g.mul(e, key.first), key.second}] += checked_mul(k, v);
    return out;
}

ResChain combine(ResChain a, const ResChain& b, Int sign)
{
    for (const auto& [key, v] : b)
        a[key] += sign * v;
    return a;
}

/// The contracting homotopy g0 [g1|..] -> [g0|g1|..].
ResChain lift(const FiniteGroup& g, const ResChain& c)
{
    ResChain out;
    for (const auto& [key, v] : c)
    {
        if (v == 0)
            continue;
        Tuple t{key.first};
        t.insert(t.end(), key.second.begin(), key.second.end());
        out[{g.identity(), t}] += v;
    }
    return out;
}

QZCochain cyclic_linking_cocycle(const Subgroup& h, Element gen)
{
    const FiniteGroup& g = h.parent();
    std::vector<QZ> values(static_cast<std::size_t>(h.order()));
    Element x = g.identity();
    for (int k = 0; k < h.order(); ++k)
    {
        values[h.to_local(x)] = QZ(k, h.order());
        x = g.mul(x, gen);
    }
    QZCochain phi = QZCochain::dense(h.as_group(), 1, std::move(values));
    return cup(phi, bockstein_one(phi));
}

QZ transferred_pairing(const BarChain& z, const Subgroup& h, Element gen)
{
    return pair(cyclic_linking_cocycle(h, gen), chain_transfer(h, z));
}

}   // namespace

ManifoldModel quaternionic_space_form(int n)
{
    if (n < 2)
        throw std::invalid_argument("quaternionic_space_form: n must be >= 2");
    GroupPtr gp = make_quaternion(n);
    const FiniteGroup& g = *gp;
    const Element one = g.identity(), x = 1, y = 2 * n, xy = g.mul(x, y);

    ResChain f0{{{one, Tuple{}}, 1}};
    ResChain fb1 = lift(g, act(g, {{1, x}, {-1, one}}, f0));
    ResChain fb2 = lift(g, act(g, {{1, y}, {-1, one}}, f0));
    GroupRingTerms norm_x;
    for (int k = 0; k < n; ++k)
        norm_x.emplace_back(1, g.pow(x, k));
    ResChain fc1 = lift(g, combine(act(g, norm_x, fb1), act(g, {{1, y}, {1, one}}, fb2), -1));
    ResChain fc2 = lift(g, combine(act(g, {{1, xy}, {1, one}}, fb1),
                                   act(g, {{1, x}, {-1, one}}, fb2), 1));
    ResChain fe = lift(g, combine(act(g, {{1, x}, {-1, one}}, fc1),
                                  act(g, {{1, xy}, {-1, one}}, fc2), -1));

    BarChain z(gp, 3);
    for (const auto& [key, v] : fe)
        z.add(key.second, v);

    ManifoldModel m{"S^3/Q_" + std::to_string(4 * n),
                    Presentation{2, {[&] {
                                         Word w(static_cast<std::size_t>(n), 1);
                                         w.push_back(-2);
                                         w.push_back(-2);
                                         return w;
                                     }(),
                                     Word{1, 2, 1, -2}}},
                    gp,
                    {x, y},
                    std::move(z)};
    m.validate();
    pin_quaternionic(m, n);
    return m;
}

QuaternionicPinning pin_quaternionic(const ManifoldModel& m, int n)
{
    const GroupPtr& gp = m.quotient;
    if (gp->order() != 4 * n)
        throw std::invalid_argument("pin_quaternionic: quotient is not Q_4n");
    const FiniteGroup& g = *gp;
    const Element x = 1, y = 2 * n, x2 = g.mul(x, x);
    const BarChain& z = m.fundamental_cycle;

    QuaternionicPinning pin;
    pin.n = n;
    std::vector<Element> gx2{x2}, gx{x}, gy{y};
    QZ lens = transferred_pairing(z, Subgroup::generated_by(gp, gx2), x2);
    pin.q = floor_mod(lens.num() * (n / lens.den()), n);
    if (gcd(pin.q, n) != 1)
        throw std::logic_error("pin_quaternionic: transfer to <x^2> is not a lens generator");
    pin.x_pairing = transferred_pairing(z, Subgroup::generated_by(gp, gx), x);
    pin.y_pairing = transferred_pairing(z, Subgroup::generated_by(gp, gy), y);
    if (pin.x_pairing.order() != 2 * n)
        throw std::logic_error("pin_quaternionic: transfer to <x> is not a lens generator");
    pin.certified_order = std::lcm(std::lcm(Int{n}, pin.x_pairing.order()), pin.y_pairing.order());
    if (pin.certified_order != 4 * n)
    {
        if (g.order() > snf_cap())
            throw SizeBoundError("pin_quaternionic: order 4n needs H_3 beyond the size cap");
        const HomologyGroup& hg = homology_group(gp, 3);
        if (hg.divisors.size() != 1)
            throw std::logic_error("pin_quaternionic: H_3 is not cyclic");
        QZ a = pair(hg.dual_cocycles[0], z);
        pin.certified_order = a.order();
    }
    if (pin.certified_order != 4 * n)
        throw std::logic_error("pin_quaternionic: cycle does not generate H_3(Q_4n)");
    return pin;
}

std::vector<std::vector<Element>> enumerate_assignments(const Presentation& p, const FiniteGroup& g)
{
    p.validate();
    if (p.generators > kMaxHomGenerators)
        throw SizeBoundError("enumerate_homs: more than 4 generators");
    if (g.order() > kMaxHomTarget)
        throw SizeBoundError("enumerate_homs: target group larger than 360");
    const int k = p.generators;
    if (k == 0)
    {
        for (const auto& w : p.relators)
            if (!w.empty())
                throw std::invalid_argument("presentation: letter in a generator-free relator");
        return {{}};
    }

    // relators checked once their highest generator is assigned
    std::vector<std::vector<const Word*>> due(static_cast<std::size_t>(k));
    for (const auto& w : p.relators)
    {
        int top = 0;
        for (int letter : w)
            top = std::max(top, std::abs(letter));
        if (top > 0)
            due[top - 1].push_back(&w);
    }

    const int n = g.order();
    std::vector<std::vector<std::vector<Element>>> shards(static_cast<std::size_t>(n));
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t first = begin; first < end; ++first)
            {
                std::vector<Element> images(static_cast<std::size_t>(k), 0);
                auto& out = shards[first];
                auto ok = [&](int level) {
                    for (const Word* w : due[level])
                        if (evaluate_word(g, images, *w) != g.identity())
                            return false;
                    return true;
                };
                auto rec = [&](auto&& self, int level) -> void {
                    if (level == k)
                    {
                        out.push_back(images);
                        return;
                    }
                    for (Element x = 0; x < n; ++x)
                    {
                        images[level] = x;
                        if (ok(level))
                            self(self, level + 1);
                    }
                };
                images[0] = static_cast<Element>(first);
                if (ok(0))
                    rec(rec, 1);
            }
        },
        1);

    std::vector<std::vector<Element>> all;
    for (auto& s : shards)
        for (auto& a : s)
            all.push_back(std::move(a));
    return all;
}

std::optional<GroupHom> hom_from_generators(const ManifoldModel& m, const GroupPtr& g,
                                            std::span<const Element> images)
{
    const FiniteGroup& src = *m.quotient;
    const std::size_t k = m.projection.size();
    if (images.size() != k)
        throw std::invalid_argument("hom_from_generators: one image per generator expected");
    std::vector<Element> f(static_cast<std::size_t>(src.order()), -1);
    f[src.identity()] = g->identity();
    std::vector<Element> queue{src.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        Element a = queue[head];
        for (std::size_t i = 0; i < k; ++i)
        {
            Element b = src.mul(a, m.projection[i]);
            Element fb = g->mul(f[a], images[i]);
            if (f[b] < 0)
            {
                f[b] = fb;
                queue.push_back(b);
            }
            else if (f[b] != fb)
                return std::nullopt;
        }
    }
    if (static_cast<int>(queue.size()) != src.order())
        throw std::invalid_argument("hom_from_generators: projection is not onto");
    return GroupHom::from_images(m.quotient, g, std::move(f));
}

std::vector<GroupHom> enumerate_homs(const ManifoldModel& m, const GroupPtr& g)
{
    std::vector<GroupHom> out;
    for (const auto& images : enumerate_assignments(m.presentation, *g))
        if (auto f = hom_from_generators(m, g, images))
            out.push_back(std::move(*f));
    return out;
}

CoveringData covering_model(const ManifoldModel& m, const GroupHom& f, const Subgroup& h)
{
    require_same_group(*m.quotient, f.source(), "covering_model");
    require_same_group(f.target(), h.parent(), "covering_model");
    std::vector<Element> members;
    for (Element x = 0; x < m.quotient->order(); ++x)
        if (h.contains(f(x)))
            members.push_back(x);
    Subgroup cover = Subgroup::from_members(m.quotient, std::move(members));
    BarChain cycle = chain_transfer(cover, m.fundamental_cycle);
    if (!is_cycle(cycle))
        throw std::logic_error("covering_model: transferred cycle has a boundary");
    if (m.quotient->order() <= snf_cap())
    {
        const HomologyGroup& hg = homology_group(m.quotient, 3);
        BarChain pushed = pushforward_chain(cover.inclusion(), cycle);
        for (const auto& kappa : hg.dual_cocycles)
            if (pair(kappa, pushed) != pair(kappa, m.fundamental_cycle) * Int{cover.index()})
                throw std::logic_error("covering_model: cover cycle does not push forward to "
                                       "index times [M]");
    }
    return CoveringData{m, f, h, std::move(cover), std::move(cycle)};
}

}   // namespace dwinv
