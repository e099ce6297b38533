#include "dwinv/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace dwinv {

// ------------------------------------------------------------- FiniteGroup

GroupPtr FiniteGroup::from_table(int order, std::vector<Element> table,
                                 std::vector<std::string> labels, std::string name)
{
    if (order < 1)
        throw std::invalid_argument("group order must be positive");
    if (order > kEagerGroupBound)
        throw SizeBoundError("group order " + std::to_string(order) + " exceeds eager bound");
    const auto n = static_cast<std::size_t>(order);
    if (table.size() != n * n)
        throw std::invalid_argument("multiplication table has " + std::to_string(table.size())
                                    + " entries, expected " + std::to_string(n * n));
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("label count does not match group order");

    for (Element v : table)
        if (v < 0 || v >= order)
            throw std::invalid_argument("table entry out of range");

    auto at = [&](Element a, Element b) { return table[static_cast<std::size_t>(a) * n + b]; };

    for (Element a = 0; a < order; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw std::invalid_argument("index 0 is not the identity");

    std::vector<Element> inv(n, -1);
    for (Element a = 0; a < order; ++a)
    {
        std::vector<char> row(n, 0), col(n, 0);
        for (Element b = 0; b < order; ++b)
        {
            if (row[at(a, b)]++ || col[at(b, a)]++)
                throw std::invalid_argument("table is not a Latin square");
            if (at(a, b) == 0)
                inv[a] = b;
        }
    }
    for (Element a = 0; a < order; ++a)
        if (at(inv[a], a) != 0)
            throw std::invalid_argument("left and right inverses disagree");

    auto check = [&](Element a, Element b, Element c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
            throw std::invalid_argument("table is not associative");
    };
    if (order <= 48)
    {
        for (Element a = 0; a < order; ++a)
            for (Element b = 0; b < order; ++b)
                for (Element c = 0; c < order; ++c)
                    check(a, b, c);
    }
    else
    {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<Element> pick(0, order - 1);
        for (int k = 0; k < 200000; ++k)
            check(pick(rng), pick(rng), pick(rng));
    }

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->table_ = std::move(table);
    g->inv_ = std::move(inv);
    g->labels_ = std::move(labels);
    g->name_ = std::move(name);
    return g;
}

Element FiniteGroup::pow(Element a, Int k) const
{
    if (k < 0)
    {
        a = inv(a);
        k = -k;
    }
    Element result = 0;
    Element base = a;
    while (k > 0)
    {
        if (k & 1)
            result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

int FiniteGroup::element_order(Element a) const
{
    int k = 1;
    Element x = a;
    while (x != 0)
    {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const
{
    for (Element a = 0; a < order_; ++a)
        for (Element b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::string FiniteGroup::label(Element a) const
{
    if (!labels_.empty())
        return labels_[a];
    return "g" + std::to_string(a);
}

// ------------------------------------------------------------ constructors

namespace {

template <class Mul>
GroupPtr tabulate(int order, Mul mul, std::vector<std::string> labels, std::string name)
{
    std::vector<Element> table(static_cast<std::size_t>(order) * order);
    for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b)
            table[static_cast<std::size_t>(a) * order + b] = mul(a, b);
    return FiniteGroup::from_table(order, std::move(table), std::move(labels), std::move(name));
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}   // namespace

GroupPtr make_cyclic(int n)
{
    if (n < 1)
        throw std::invalid_argument("make_cyclic: n must be >= 1");
    std::vector<std::string> labels(n);
    for (int k = 0; k < n; ++k)
        labels[k] = std::to_string(k);
    return tabulate(n, [n](Element a, Element b) { return (a + b) % n; }, std::move(labels),
                    "Z/" + std::to_string(n));
}

GroupPtr make_dihedral(int n)
{
    if (n < 1)
        throw std::invalid_argument("make_dihedral: n must be >= 1");
    auto mul = [n](Element x, Element y) {
        int a = x % n, b = x / n, c = y % n, d = y / n;
        int rot = b == 0 ? a + c : a - c;
        return floor_mod(rot, n) + n * ((b + d) % 2);
    };
    std::vector<std::string> labels(2 * n);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a)
            labels[a + n * b] = "r^" + std::to_string(a) + (b ? " s" : "");
    return tabulate(2 * n, mul, std::move(labels), "D_" + std::to_string(n));
}

GroupPtr make_quaternion(int n)
{
    if (n < 1)
        throw std::invalid_argument("make_quaternion: n must be >= 1");
    const int m = 2 * n;
    auto mul = [n, m](Element u, Element v) {
        int a = u % m, b = u / m, c = v % m, d = v / m;
        int e = b == 0 ? a + c : a - c;
        if (b + d == 2)
            return static_cast<Element>(floor_mod(e + n, m));
        return static_cast<Element>(floor_mod(e, m) + m * (b + d));
    };
    std::vector<std::string> labels(4 * n);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < m; ++a)
            labels[a + m * b] = "x^" + std::to_string(a) + (b ? " y" : "");
    return tabulate(4 * n, mul, std::move(labels), "Q_" + std::to_string(4 * n));
}

GroupPtr make_symmetric(int d)
{
    if (d < 1)
        throw std::invalid_argument("make_symmetric: d must be >= 1");
    Int order = perm::factorial(d);
    if (order > kEagerGroupBound)
        throw SizeBoundError("make_symmetric: d! exceeds eager bound");
    std::vector<perm::Permutation> elems;
    for (Int r = 0; r < order; ++r)
        elems.push_back(perm::unrank(r, d));
    std::vector<std::string> labels;
    for (const auto& p : elems)
    {
        std::string s = "[";
        for (int i = 0; i < d; ++i)
            s += (i ? " " : "") + std::to_string(p[i]);
        labels.push_back(s + "]");
    }
    return tabulate(
        static_cast<int>(order),
        [&](Element a, Element b) {
            return static_cast<Element>(perm::rank(perm::compose(elems[a], elems[b])));
        },
        std::move(labels), "S_" + std::to_string(d));
}

GroupPtr make_sl2(int q)
{
    if (!is_prime(q) || q == 2 || q > 7)
        throw std::invalid_argument("make_sl2: q must be an odd prime <= 7");
    using Mat = std::array<int, 4>;
    std::vector<Mat> elems{{1, 0, 0, 1}};
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                {
                    if (floor_mod(a * d - b * c, q) != 1)
                        continue;
                    if (a == 1 && b == 0 && c == 0 && d == 1)
                        continue;
                    elems.push_back({a, b, c, d});
                }
    auto index = [&](const Mat& m) {
        return static_cast<Element>(std::find(elems.begin(), elems.end(), m) - elems.begin());
    };
    const int order = static_cast<int>(elems.size());
    std::vector<Element> table(static_cast<std::size_t>(order) * order);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
        {
            const Mat& u = elems[x];
            const Mat& v = elems[y];
            Mat w{(u[0] * v[0] + u[1] * v[2]) % q, (u[0] * v[1] + u[1] * v[3]) % q,
                  (u[2] * v[0] + u[3] * v[2]) % q, (u[2] * v[1] + u[3] * v[3]) % q};
            table[static_cast<std::size_t>(x) * order + y] = index(w);
        }
    std::vector<std::string> labels;
    for (const auto& m : elems)
        labels.push_back("[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + "; "
                         + std::to_string(m[2]) + " " + std::to_string(m[3]) + "]");
    return FiniteGroup::from_table(order, std::move(table), std::move(labels),
                                   "SL2(F_" + std::to_string(q) + ")");
}

// ------------------------------------------------------------ permutations

namespace perm {

Permutation identity(int d)
{
    Permutation p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Permutation inverse(const Permutation& a)
{
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[a[i]] = static_cast<int>(i);
    return r;
}

int sign(const Permutation& a)
{
    int s = 1;
    std::vector<char> seen(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = a[j], ++len)
            seen[j] = 1;
        if (len % 2 == 0)
            s = -s;
    }
    return s;
}

Int factorial(int d)
{
    Int f = 1;
    for (int k = 2; k <= d; ++k)
        f = checked_mul(f, k);
    return f;
}

Int rank(const Permutation& a)
{
    const int d = static_cast<int>(a.size());
    Int r = 0;
    for (int i = 0; i < d; ++i)
    {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (a[j] < a[i])
                ++smaller;
        r += smaller * factorial(d - 1 - i);
    }
    return r;
}

Permutation unrank(Int r, int d)
{
    std::vector<int> pool = identity(d);
    Permutation p;
    for (int i = 0; i < d; ++i)
    {
        Int f = factorial(d - 1 - i);
        auto k = static_cast<std::size_t>(r / f);
        r %= f;
        p.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return p;
}

}   // namespace perm

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Element> gens)
{
    const int n = parent->order();
    std::vector<char> in(n, 0);
    std::vector<Element> frontier{0};
    in[0] = 1;
    while (!frontier.empty())
    {
        Element x = frontier.back();
        frontier.pop_back();
        for (Element g : gens)
        {
            if (g < 0 || g >= n)
                throw std::invalid_argument("generator out of range");
            Element y = parent->mul(x, g);
            if (!in[y])
            {
                in[y] = 1;
                frontier.push_back(y);
            }
        }
    }
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x)
        if (in[x])
            members.push_back(x);
    return from_members(std::move(parent), std::move(members));
}

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<Element> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int n = parent->order();
    if (members.empty() || members.front() != 0)
        throw std::invalid_argument("subgroup must contain the identity");
    std::vector<char> in(n, 0);
    for (Element m : members)
    {
        if (m < 0 || m >= n)
            throw std::invalid_argument("subgroup member out of range");
        in[m] = 1;
    }
    for (Element a : members)
    {
        if (!in[parent->inv(a)])
            throw std::invalid_argument("subgroup not closed under inverses");
        for (Element b : members)
            if (!in[parent->mul(a, b)])
                throw std::invalid_argument("subgroup not closed under multiplication");
    }

    Subgroup h;
    h.parent_ = std::move(parent);
    h.members_ = std::move(members);
    h.local_.assign(n, -1);
    for (std::size_t i = 0; i < h.members_.size(); ++i)
        h.local_[h.members_[i]] = static_cast<int>(i);

    // Greedy transversal: smallest element of each right coset H*x.
    std::vector<Element> reps;
    std::vector<char> assigned(n, 0);
    for (Element x = 0; x < n; ++x)
    {
        if (assigned[x])
            continue;
        reps.push_back(x);
        for (Element m : h.members_)
            assigned[h.parent_->mul(m, x)] = 1;
    }
    h.build(std::move(reps));

    const int k = h.order();
    std::vector<Element> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<std::size_t>(i) * k + j]
                = h.local_[h.parent_->mul(h.members_[i], h.members_[j])];
    std::vector<std::string> labels;
    for (Element m : h.members_)
        labels.push_back(h.parent_->label(m));
    h.local_group_ = FiniteGroup::from_table(k, std::move(table), std::move(labels),
                                             "subgroup of " + h.parent_->name());
    return h;
}

Subgroup Subgroup::whole(GroupPtr parent)
{
    std::vector<Element> all(parent->order());
    std::iota(all.begin(), all.end(), 0);
    return from_members(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return from_members(std::move(parent), {0}); }

void Subgroup::build(std::vector<Element> reps)
{
    const int n = parent_->order();
    if (reps.empty() || reps.front() != 0)
        throw std::invalid_argument("transversal must start with the identity");
    if (reps.size() * members_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("transversal has the wrong number of cosets");
    coset_.assign(n, -1);
    for (std::size_t i = 0; i < reps.size(); ++i)
    {
        for (Element m : members_)
        {
            Element x = parent_->mul(m, reps[i]);
            if (coset_[x] != -1)
                throw std::invalid_argument("transversal has two elements in one coset");
            coset_[x] = static_cast<int>(i);
        }
    }
    transversal_ = std::move(reps);
}

Subgroup Subgroup::with_transversal(std::vector<Element> reps) const
{
    Subgroup h = *this;
    h.build(std::move(reps));
    return h;
}

Element Subgroup::h_component(Element sigma) const
{
    return parent_->mul(sigma, parent_->inv(representative(sigma)));
}

Element Subgroup::to_local(Element h) const
{
    int l = local_[h];
    if (l < 0)
        throw std::invalid_argument("element is not in the subgroup");
    return l;
}

GroupHom Subgroup::inclusion() const
{
    return GroupHom::from_images(local_group_, parent_, members_);
}

int Subgroup::walk(int start, std::span<const Element> sigmas, std::span<Element> out_local) const
{
    Element t = transversal_[start];
    int coset = start;
    for (std::size_t k = 0; k < sigmas.size(); ++k)
    {
        Element ts = parent_->mul(t, sigmas[k]);
        coset = coset_[ts];
        Element next = transversal_[coset];
        out_local[k] = local_[parent_->mul(ts, parent_->inv(next))];
        t = next;
    }
    return coset;
}

// ---------------------------------------------------------------- GroupHom

GroupHom GroupHom::from_images(GroupPtr source, GroupPtr target, std::vector<Element> image)
{
    const int n = source->order();
    if (static_cast<int>(image.size()) != n)
        throw std::invalid_argument("hom image table has the wrong size");
    for (Element v : image)
        if (v < 0 || v >= target->order())
            throw std::invalid_argument("hom image out of range");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
                throw std::invalid_argument("map is not a homomorphism");
    GroupHom f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.image_ = std::move(image);
    return f;
}

GroupHom GroupHom::identity(GroupPtr g)
{
    std::vector<Element> image(g->order());
    std::iota(image.begin(), image.end(), 0);
    GroupHom f;
    f.source_ = g;
    f.target_ = std::move(g);
    f.image_ = std::move(image);
    return f;
}

GroupHom GroupHom::then(const GroupHom& other) const
{
    if (target_.get() != other.source_.get())
        throw std::invalid_argument("composition of homomorphisms with mismatched groups");
    std::vector<Element> image(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        image[i] = other.image_[image_[i]];
    GroupHom f;
    f.source_ = source_;
    f.target_ = other.target_;
    f.image_ = std::move(image);
    return f;
}

std::vector<Element> GroupHom::image_set() const
{
    std::set<Element> s(image_.begin(), image_.end());
    return {s.begin(), s.end()};
}

bool GroupHom::is_surjective() const
{
    return static_cast<int>(image_set().size()) == target_->order();
}

// ------------------------------------------------------------------ Sylow

Subgroup sylow_subgroup(GroupPtr g, int p)
{
    const int n = g->order();
    if (!is_prime(p) || n % p != 0)
        throw std::invalid_argument("sylow_subgroup: p must be a prime dividing |G|");
    int target = 1;
    for (int m = n; m % p == 0; m /= p)
        target *= p;

    auto is_p_power = [p](int k) {
        while (k % p == 0)
            k /= p;
        return k == 1;
    };

    std::vector<Element> gens;
    Subgroup current = Subgroup::trivial(g);
    while (current.order() < target)
    {
        bool grown = false;
        for (Element x = 1; x < n && !grown; ++x)
        {
            if (current.contains(x) || !is_p_power(g->element_order(x)))
                continue;
            // x must normalize the current subgroup so the product is a group.
            bool normalizes = true;
            for (Element m : current.members())
                if (!current.contains(g->mul(g->mul(x, m), g->inv(x))))
                {
                    normalizes = false;
                    break;
                }
            if (!normalizes)
                continue;
            gens.push_back(x);
            Subgroup candidate = Subgroup::generated_by(g, gens);
            if (is_p_power(candidate.order()))
            {
                current = std::move(candidate);
                grown = true;
            }
            else
            {
                gens.pop_back();
            }
        }
        if (!grown)
            throw std::logic_error("sylow_subgroup: growth stalled");
    }
    return current;
}

// ------------------------------------------------------------------ Wreath

WreathProduct::WreathProduct(GroupPtr base, int degree) : base_(std::move(base)), degree_(degree)
{
    if (degree < 1)
        throw std::invalid_argument("wreath degree must be >= 1");
}

Int WreathProduct::order() const
{
    Int o = perm::factorial(degree_);
    for (int i = 0; i < degree_; ++i)
        o = checked_mul(o, base_->order());
    return o;
}

WreathElement WreathProduct::identity() const
{
    return {std::vector<Element>(degree_, 0), perm::identity(degree_)};
}

WreathElement WreathProduct::multiply(const WreathElement& a, const WreathElement& b) const
{
    WreathElement r;
    r.coords.resize(degree_);
    auto a_inv = perm::inverse(a.perm);
    for (int i = 0; i < degree_; ++i)
        r.coords[i] = base_->mul(a.coords[i], b.coords[a_inv[i]]);
    r.perm = perm::compose(a.perm, b.perm);
    return r;
}

WreathElement WreathProduct::inverse(const WreathElement& a) const
{
    // (h, s)^{-1} = (s^{-1}(h^{-1}), s^{-1}); coordinate i is h_{s(i)}^{-1}.
    WreathElement r;
    r.perm = perm::inverse(a.perm);
    r.coords.resize(degree_);
    for (int i = 0; i < degree_; ++i)
        r.coords[i] = base_->inv(a.coords[a.perm[i]]);
    return r;
}

Int WreathProduct::index_of(const WreathElement& e) const
{
    Int idx = 0;
    Int scale = 1;
    for (int i = 0; i < degree_; ++i)
    {
        idx += e.coords[i] * scale;
        scale *= base_->order();
    }
    return idx + perm::rank(e.perm) * scale;
}

WreathElement WreathProduct::element(Int index) const
{
    WreathElement e;
    e.coords.resize(degree_);
    for (int i = 0; i < degree_; ++i)
    {
        e.coords[i] = static_cast<Element>(index % base_->order());
        index /= base_->order();
    }
    e.perm = perm::unrank(index, degree_);
    return e;
}

GroupPtr WreathProduct::materialize() const
{
    Int n = order();
    if (n > kEagerGroupBound)
        throw SizeBoundError("wreath product of order " + std::to_string(n)
                             + " exceeds eager bound");
    std::vector<WreathElement> elems;
    for (Int i = 0; i < n; ++i)
        elems.push_back(element(i));
    std::vector<Element> table(static_cast<std::size_t>(n * n));
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
            table[a * n + b] = static_cast<Element>(index_of(multiply(elems[a], elems[b])));
    return FiniteGroup::from_table(static_cast<int>(n), std::move(table), {},
                                   base_->name() + " wr S_" + std::to_string(degree_));
}

GroupPtr make_wreath(GroupPtr base, int d) { return WreathProduct(std::move(base), d).materialize(); }

// -------------------------------------------------------------- Monomial

MonomialRepresentation::MonomialRepresentation(const Subgroup& h)
    : subgroup_(h), wreath_(h.as_group(), h.index())
{
    const FiniteGroup& g = h.parent();
    const int d = h.index();
    images_.reserve(g.order());
    for (Element x = 0; x < g.order(); ++x)
    {
        WreathElement e;
        e.coords.resize(d);
        perm::Permutation s_inv(d);
        for (int i = 0; i < d; ++i)
        {
            Element step = x;
            Element local;
            s_inv[i] = h.walk(i, std::span<const Element>(&step, 1), std::span<Element>(&local, 1));
            e.coords[i] = local;
        }
        e.perm = perm::inverse(s_inv);
        images_.push_back(std::move(e));
    }
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            if (!(images_[g.mul(a, b)] == wreath_.multiply(images_[a], images_[b])))
                throw std::logic_error("monomial representation is not a homomorphism");
}

GroupHom MonomialRepresentation::as_hom() const
{
    GroupPtr w = wreath_.materialize();
    std::vector<Element> image;
    for (const auto& e : images_)
        image.push_back(static_cast<Element>(wreath_.index_of(e)));
    return GroupHom::from_images(subgroup_.parent_ptr(), std::move(w), std::move(image));
}

MonomialRepresentation monomial_representation(const Subgroup& h) { return MonomialRepresentation(h); }

}   // namespace dwinv
