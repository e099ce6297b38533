#include "dwinv/homology.hpp"

#include <atomic>
#include <map>
#include <mutex>

namespace dwinv {

namespace {

std::atomic<int> g_snf_cap{kDefaultSnfCap};

void face(std::span<const Element> t, int i, const FiniteGroup& g, std::span<Element> out)
{
    // Face i in 1..len-1 multiplies entries i-1 and i.
    for (std::size_t k = 0, src = 0; k < out.size(); ++k, ++src)
    {
        if (static_cast<int>(src) == i - 1)
        {
            out[k] = g.mul(t[src], t[src + 1]);
            ++src;
        }
        else
        {
            out[k] = t[src];
        }
    }
}

/// Calls emit(lower_flat, sign) for each face of the tuple t of length m.
template <class Emit>
void for_each_face(std::span<const Element> t, const FiniteGroup& g, Emit emit)
{
    const int m = static_cast<int>(t.size());
    const int order = g.order();
    Element buf[kMaxCochainDegree + 1];
    std::span<Element> f(buf, static_cast<std::size_t>(m - 1));
    emit(encode_tuple(t.subspan(1), order), Int{1});
    for (int i = 1; i < m; ++i)
    {
        face(t, i, g, f);
        emit(encode_tuple(f, order), i % 2 ? Int{-1} : Int{1});
    }
    emit(encode_tuple(t.first(static_cast<std::size_t>(m - 1)), order), m % 2 ? Int{-1} : Int{1});
}

void check_small(Int rows, Int cols)
{
    if (rows > std::numeric_limits<int>::max() || cols > std::numeric_limits<int>::max())
        throw SizeBoundError("bar complex matrix too large");
}

struct CoboundaryCache
{
    std::mutex mutex;
    std::map<std::pair<const FiniteGroup*, int>,
             std::pair<GroupPtr, std::shared_ptr<const SmithDecomposition>>>
        entries;
};

CoboundaryCache& coboundary_cache()
{
    static CoboundaryCache cache;
    return cache;
}

/// SNF of delta^{n-1}, cached per group and degree.
std::shared_ptr<const SmithDecomposition> coboundary_snf(const GroupPtr& g, int n)
{
    auto& cache = coboundary_cache();
    auto key = std::make_pair(g.get(), n);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end())
            return it->second.second;
    }
    if (tuple_count(g->order(), n) > kCoboundaryRowBound)
        throw SizeBoundError("coboundary decider: |G|^" + std::to_string(n) + " exceeds bound");
    SnfOptions opts;
    opts.record_row_ops = true;
    opts.record_col_ops = true;
    auto snf = std::make_shared<const SmithDecomposition>(
        smith_normal_form(coboundary_matrix(*g, n - 1), opts));
    std::lock_guard lock(cache.mutex);
    cache.entries.emplace(key, std::make_pair(g, snf));
    return snf;
}

}   // namespace

void set_snf_cap(int cap) { g_snf_cap = std::clamp(cap, 1, kHardSnfCap); }
int snf_cap() { return g_snf_cap; }

SparseMatrix boundary_matrix(const FiniteGroup& g, int n_plus_one)
{
    if (n_plus_one < 1)
        throw std::invalid_argument("boundary_matrix: degree must be >= 1");
    const int order = g.order();
    Int rows = tuple_count(order, n_plus_one - 1);
    Int cols = tuple_count(order, n_plus_one);
    check_small(rows, cols);
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    if (n_plus_one == 1)
        return m;
    std::vector<Element> t(static_cast<std::size_t>(n_plus_one));
    for (Int c = 0; c < cols; ++c)
    {
        decode_tuple(c, order, t);
        for_each_face(t, g, [&](Int r, Int s) {
            m.add(static_cast<int>(r), static_cast<int>(c), s);
        });
    }
    return m;
}

SparseMatrix coboundary_matrix(const FiniteGroup& g, int n)
{
    if (n < 0)
        throw std::invalid_argument("coboundary_matrix: degree must be >= 0");
    const int order = g.order();
    Int rows = tuple_count(order, n + 1);
    Int cols = tuple_count(order, n);
    check_small(rows, cols);
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    std::vector<Element> t(static_cast<std::size_t>(n + 1));
    for (Int r = 0; r < rows; ++r)
    {
        decode_tuple(r, order, t);
        for_each_face(t, g, [&](Int c, Int s) {
            m.add(static_cast<int>(r), static_cast<int>(c), s);
        });
    }
    return m;
}

Int HomologyGroup::order() const
{
    Int o = 1;
    for (Int d : divisors)
        o = checked_mul(o, d);
    return o;
}

HomologyGroup compute_homology(const GroupPtr& g, int n, const HomologyOptions& opts)
{
    if (n < 1 || n > 3)
        throw std::invalid_argument("homology_group: degree must be 1, 2 or 3");
    int cap = opts.size_cap > 0 ? std::min(opts.size_cap, kHardSnfCap) : snf_cap();
    if (n == 3 && g->order() > cap)
        throw SizeBoundError("homology_group: |G| = " + std::to_string(g->order())
                             + " exceeds the SNF cap " + std::to_string(cap));

    SnfOptions snf_opts;
    snf_opts.record_row_ops = true;
    snf_opts.record_col_ops = false;
    snf_opts.shuffle_seed = opts.shuffle_seed;
    SparseMatrix a = boundary_matrix(*g, n + 1);
    SmithDecomposition snf = smith_normal_form(a, snf_opts);

    HomologyGroup h;
    h.group = g;
    h.degree = n;
    const auto rows = static_cast<std::size_t>(a.rows());
    const int order = g->order();
    for (const auto& p : snf.pivots())
    {
        if (p.d == 1)
            continue;
        h.divisors.push_back(p.d);

        std::vector<Int> e(rows, 0);
        e[p.row] = 1;
        snf.apply_u_inverse(e);
        BarChain z(g, n);
        std::vector<Element> t(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < rows; ++r)
            if (e[r] != 0)
            {
                decode_tuple(static_cast<Int>(r), order, t);
                z.add(t, e[r]);
            }
        h.generators.push_back(std::move(z));

        std::vector<Int> row(rows, 0);
        row[p.row] = 1;
        snf.apply_u_transpose(row);
        std::vector<QZ> values(rows);
        for (std::size_t r = 0; r < rows; ++r)
            values[r] = QZ(row[r], p.d);
        h.dual_cocycles.push_back(QZCochain::dense(g, n, std::move(values)));
    }
    return h;
}

const HomologyGroup& homology_group(const GroupPtr& g, int n)
{
    static std::mutex mutex;
    static std::map<std::tuple<const FiniteGroup*, int, int>, std::unique_ptr<HomologyGroup>> cache;
    auto key = std::make_tuple(g.get(), n, n == 3 ? snf_cap() : 0);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto h = std::make_unique<HomologyGroup>(compute_homology(g, n, {}));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(h));
    return *it->second;
}

// ------------------------------------------------------------- deciders

namespace {

template <class V>
std::vector<V> dense_values(const Cochain<V>& c)
{
    std::vector<V> v(static_cast<std::size_t>(c.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c.at_flat(static_cast<Int>(i));
    return v;
}

void check_degree(int n)
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("coboundary decider: degree must be 1..4");
}

}   // namespace

CoboundarySolution<QZ> solve_coboundary(const QZCochain& c)
{
    check_degree(c.degree());
    const int n = c.degree();
    auto snf = coboundary_snf(c.group_ptr(), n);
    std::vector<QZ> x = dense_values(c);
    snf->apply_u(x);
    CoboundarySolution<QZ> out;
    for (int r : snf->zero_rows())
        if (!x[r].is_zero())
            return out;
    std::vector<QZ> y(static_cast<std::size_t>(snf->cols()));
    for (const auto& p : snf->pivots())
    {
        const QZ& v = x[p.row];
        y[p.col] = QZ(v.num(), checked_mul(v.den(), p.d));
    }
    snf->apply_v(y);
    out.is_coboundary = true;
    out.witness = QZCochain::dense(c.group_ptr(), n - 1, std::move(y));
    return out;
}

CoboundarySolution<Int> solve_coboundary(const IntCochain& c)
{
    check_degree(c.degree());
    const int n = c.degree();
    auto snf = coboundary_snf(c.group_ptr(), n);
    std::vector<Int> x = dense_values(c);
    snf->apply_u(x);
    CoboundarySolution<Int> out;
    for (int r : snf->zero_rows())
        if (x[r] != 0)
            return out;
    std::vector<Int> y(static_cast<std::size_t>(snf->cols()), 0);
    for (const auto& p : snf->pivots())
    {
        if (x[p.row] % p.d != 0)
            return out;
        y[p.col] = x[p.row] / p.d;
    }
    snf->apply_v(y);
    out.is_coboundary = true;
    out.witness = IntCochain::dense(c.group_ptr(), n - 1, std::move(y));
    return out;
}

bool is_coboundary(const QZCochain& c) { return solve_coboundary(c).is_coboundary; }
bool is_coboundary(const IntCochain& c) { return solve_coboundary(c).is_coboundary; }

bool classes_equal(const QZCochain& a, const QZCochain& b) { return is_coboundary(a - b); }
bool classes_equal(const IntCochain& a, const IntCochain& b) { return is_coboundary(a - b); }

Int class_order(const QZCochain& c)
{
    check_degree(c.degree());
    auto snf = coboundary_snf(c.group_ptr(), c.degree());
    std::vector<QZ> x = dense_values(c);
    snf->apply_u(x);
    Int order = 1;
    for (int r : snf->zero_rows())
        order = lcm(order, x[r].order());
    return order;
}

std::vector<QZ> pairing_fingerprint(const QZCochain& c, const HomologyGroup& h)
{
    if (&c.group() != h.group.get() || c.degree() != h.degree)
        throw std::invalid_argument("pairing_fingerprint: cochain does not match the homology");
    std::vector<QZ> out;
    for (const auto& z : h.generators)
        out.push_back(pair(c, z));
    return out;
}

std::vector<QZ> pairing_fingerprint(const QZCochain& c)
{
    return pairing_fingerprint(c, homology_group(c.group_ptr(), c.degree()));
}

}   // namespace dwinv
