#include "dwinv/snf.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace dwinv {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be non-negative");
}

void SparseMatrix::add(int r, int c, Int v)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    if (v == 0)
        return;
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
    {
        it->second = checked_add(it->second, v);
        if (it->second == 0)
            row.erase(it);
    }
    else
    {
        row.insert(it, {c, v});
    }
}

Int SparseMatrix::at(int r, int c) const
{
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == c ? it->second : 0;
}

std::vector<Int> SparseMatrix::multiply(const std::vector<Int>& x) const
{
    std::vector<Int> y(rows_, 0);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            y[r] = checked_add(y[r], checked_mul(v, x[c]));
    return y;
}

std::vector<Int> SmithDecomposition::divisors() const
{
    std::vector<Int> d;
    for (const auto& p : pivots_)
        d.push_back(p.d);
    return d;
}

std::vector<int> SmithDecomposition::zero_rows() const
{
    std::vector<char> used(rows_, 0);
    for (const auto& p : pivots_)
        used[p.row] = 1;
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r)
        if (!used[r])
            out.push_back(r);
    return out;
}

bool SmithDecomposition::verify(const SparseMatrix& a) const
{
    if (!row_ops_recorded_ || !col_ops_recorded_)
        throw std::logic_error("verify needs both operation logs");
    const auto n = static_cast<std::size_t>(rows_);
    const auto m = static_cast<std::size_t>(cols_);
    std::vector<std::vector<Int>> dense(n, std::vector<Int>(m, 0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : a.row(r))
            dense[r][c] = v;
    for (const auto& op : row_ops_)
    {
        if (op.i == op.j)
        {
            for (auto& v : dense[op.i])
                v = checked_mul(v, op.a);
            continue;
        }
        for (std::size_t c = 0; c < m; ++c)
        {
            Int x = dense[op.i][c], y = dense[op.j][c];
            dense[op.i][c] = checked_add(checked_mul(op.a, x), checked_mul(op.b, y));
            dense[op.j][c] = checked_add(checked_mul(op.c, x), checked_mul(op.d, y));
        }
    }
    for (const auto& op : col_ops_)
    {
        for (std::size_t r = 0; r < n; ++r)
        {
            if (op.i == op.j)
            {
                dense[r][op.i] = checked_mul(dense[r][op.i], op.a);
                continue;
            }
            Int x = dense[r][op.i], y = dense[r][op.j];
            dense[r][op.i] = checked_add(checked_mul(op.a, x), checked_mul(op.b, y));
            dense[r][op.j] = checked_add(checked_mul(op.c, x), checked_mul(op.d, y));
        }
    }
    std::vector<std::vector<Int>> expected(n, std::vector<Int>(m, 0));
    for (const auto& p : pivots_)
        expected[p.row][p.col] = p.d;
    if (dense != expected)
        return false;
    for (std::size_t k = 1; k < pivots_.size(); ++k)
        if (pivots_[k].d % pivots_[k - 1].d != 0)
            return false;
    return true;
}

namespace {

class Eliminator
{
    public:
        Eliminator(const SparseMatrix& a, const SnfOptions& opts)
            : opts_(opts), rows_(a.rows()), cols_(a.cols()), row_data_(a.rows()),
              col_rows_(a.cols()), col_count_(a.cols(), 0), row_active_(a.rows(), 1),
              col_active_(a.cols(), 1), rng_(opts.shuffle_seed)
        {
            for (int r = 0; r < rows_; ++r)
            {
                row_data_[r] = a.row(r);
                for (const auto& [c, v] : row_data_[r])
                {
                    col_rows_[c].push_back(r);
                    ++col_count_[c];
                }
            }
            tiebreak_.resize(cols_);
            for (int c = 0; c < cols_; ++c)
                tiebreak_[c] = opts.shuffle_seed ? static_cast<int>(rng_() & 0x3fffffff) : c;
        }

        void unit_phase();
        void general_phase();
        void fix_divisibility();

        std::vector<SmithDecomposition::Pivot> pivots;
        std::vector<UnimodularOp> row_ops;
        std::vector<UnimodularOp> col_ops;

    private:
        using Row = SparseMatrix::Row;

        Int entry(int r, int c) const
        {
            const Row& row = row_data_[r];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& e, int col) { return e.first < col; });
            return it != row.end() && it->first == c ? it->second : 0;
        }

        /// Active rows with a nonzero in column c; compacts the index.
        std::vector<int> rows_in_column(int c)
        {
            auto& list = col_rows_[c];
            std::vector<int> out;
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            std::vector<int> keep;
            for (int r : list)
            {
                if (entry(r, c) == 0)
                    continue;
                keep.push_back(r);
                if (row_active_[r])
                    out.push_back(r);
            }
            list = std::move(keep);
            return out;
        }

        void record_row(int i, int j, Int a, Int b, Int c, Int d)
        {
            if (opts_.record_row_ops)
                row_ops.push_back({i, j, a, b, c, d});
        }
        void record_col(int i, int j, Int a, Int b, Int c, Int d)
        {
            if (opts_.record_col_ops)
                col_ops.push_back({i, j, a, b, c, d});
        }

        /// row_i += k * row_r, keeping column counts and indices current.
        void add_row(int i, int r, Int k, std::vector<int>* touched)
        {
            if (k == 0)
                return;
            const Row& src = row_data_[r];
            const Row& dst = row_data_[i];
            Row out;
            out.reserve(dst.size() + src.size());
            std::size_t p = 0, q = 0;
            while (p < dst.size() || q < src.size())
            {
                if (q == src.size() || (p < dst.size() && dst[p].first < src[q].first))
                {
                    out.push_back(dst[p++]);
                    continue;
                }
                int c = src[q].first;
                Int add = checked_mul(k, src[q].second);
                ++q;
                if (p < dst.size() && dst[p].first == c)
                {
                    Int v = checked_add(dst[p].second, add);
                    ++p;
                    if (v != 0)
                        out.push_back({c, v});
                    else
                        --col_count_[c];
                }
                else
                {
                    out.push_back({c, add});
                    ++col_count_[c];
                    col_rows_[c].push_back(i);
                }
                if (touched)
                    touched->push_back(c);
            }
            row_data_[i] = std::move(out);
            record_row(i, r, 1, k, 0, 1);
        }

        /// Removes a pivot whose row and column are otherwise zero.
        void retire(int r, int c)
        {
            Int v = entry(r, c);
            if (v < 0)
                record_row(r, r, -1, 0, 0, 0);
            pivots.push_back({r, c, v < 0 ? -v : v});
            for (const auto& e : row_data_[r])
                --col_count_[e.first];
            row_data_[r].clear();
            row_active_[r] = 0;
            col_active_[c] = 0;
        }

        const SnfOptions& opts_;
        int rows_;
        int cols_;
        std::vector<Row> row_data_;
        std::vector<std::vector<int>> col_rows_;
        std::vector<int> col_count_;
        std::vector<char> row_active_;
        std::vector<char> col_active_;
        std::vector<int> tiebreak_;
        std::mt19937_64 rng_;
};

void Eliminator::unit_phase()
{
    using Entry = std::tuple<int, int, int>;   // count, tiebreak, column
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (int c = 0; c < cols_; ++c)
        if (col_count_[c] > 0)
            queue.emplace(col_count_[c], tiebreak_[c], c);

    std::vector<int> deferred;
    std::vector<int> touched;
    bool progress = true;
    while (progress)
    {
        progress = false;
        while (!queue.empty())
        {
            auto [count, tb, c] = queue.top();
            queue.pop();
            if (!col_active_[c] || count != col_count_[c] || count == 0)
                continue;
            std::vector<int> members = rows_in_column(c);
            int best = -1;
            std::size_t best_len = 0;
            for (int r : members)
            {
                Int v = entry(r, c);
                if (v != 1 && v != -1)
                    continue;
                std::size_t len = row_data_[r].size();
                if (best < 0 || len < best_len
                    || (len == best_len && opts_.shuffle_seed && (rng_() & 1)))
                {
                    best = r;
                    best_len = len;
                }
            }
            if (best < 0)
            {
                deferred.push_back(c);
                continue;
            }
            const Int u = entry(best, c);
            touched.clear();
            for (int r : members)
                if (r != best)
                    add_row(r, best, -entry(r, c) * u, &touched);
            for (const auto& [j, w] : row_data_[best])
                if (j != c)
                    record_col(j, c, 1, -w * u, 0, 1);
            for (const auto& e : row_data_[best])
                touched.push_back(e.first);
            retire(best, c);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (int j : touched)
                if (col_active_[j] && col_count_[j] > 0)
                    queue.emplace(col_count_[j], tiebreak_[j], j);
            progress = true;
        }
        if (!progress)
            break;
        for (int c : deferred)
            if (col_active_[c] && col_count_[c] > 0)
                queue.emplace(col_count_[c], tiebreak_[c], c);
        deferred.clear();
        progress = !queue.empty();
        if (!progress)
            break;
        // Only continue if some deferred column now holds a unit.
        bool any_unit = false;
        auto copy = queue;
        while (!copy.empty() && !any_unit)
        {
            int c = std::get<2>(copy.top());
            copy.pop();
            for (int r : rows_in_column(c))
            {
                Int v = entry(r, c);
                if (v == 1 || v == -1)
                {
                    any_unit = true;
                    break;
                }
            }
        }
        progress = any_unit;
    }
}

void Eliminator::general_phase()
{
    auto smallest = [&](int& pr, int& pc) {
        Int best = 0;
        for (int r = 0; r < rows_; ++r)
        {
            if (!row_active_[r])
                continue;
            for (const auto& [c, v] : row_data_[r])
            {
                Int a = v < 0 ? -v : v;
                if (best == 0 || a < best)
                {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        }
        return best != 0;
    };

    int p = -1, q = -1;
    while (smallest(p, q))
    {
        for (;;)
        {
            const Int pv = entry(p, q);
            bool clean = true;
            int next_r = -1, next_c = -1;
            Int next_abs = 0;
            for (int r : rows_in_column(q))
            {
                if (r == p)
                    continue;
                Int v = entry(r, q);
                Int t = v / pv;
                if (t != 0)
                    add_row(r, p, -t, nullptr);
                Int rem = entry(r, q);
                if (rem != 0)
                {
                    clean = false;
                    Int a = rem < 0 ? -rem : rem;
                    if (next_abs == 0 || a < next_abs)
                    {
                        next_abs = a;
                        next_r = r;
                        next_c = q;
                    }
                }
            }
            // Column operations touch only row p once column q is clear.
            Row& prow = row_data_[p];
            if (clean)
            {
                Row kept;
                for (const auto& [c, v] : prow)
                {
                    if (c == q)
                    {
                        kept.push_back({c, v});
                        continue;
                    }
                    Int t = v / pv;
                    Int rem = v - t * pv;
                    if (t != 0)
                        record_col(c, q, 1, -t, 0, 1);
                    if (rem != 0)
                    {
                        kept.push_back({c, rem});
                        clean = false;
                        Int a = rem < 0 ? -rem : rem;
                        if (next_abs == 0 || a < next_abs)
                        {
                            next_abs = a;
                            next_r = p;
                            next_c = c;
                        }
                    }
                    else
                    {
                        --col_count_[c];
                    }
                }
                prow = std::move(kept);
            }
            if (clean)
                break;
            p = next_r;
            q = next_c;
        }
        retire(p, q);
    }
}

void Eliminator::fix_divisibility()
{
    std::stable_sort(pivots.begin(), pivots.end(),
                     [](const auto& x, const auto& y) { return x.d < y.d; });
    std::size_t first = 0;
    while (first < pivots.size() && pivots[first].d == 1)
        ++first;
    for (std::size_t i = first; i < pivots.size(); ++i)
        for (std::size_t j = i + 1; j < pivots.size(); ++j)
        {
            Int a = pivots[i].d, b = pivots[j].d;
            if (b % a == 0)
                continue;
            auto [g, s, t] = extended_gcd(a, b);
            int ri = pivots[i].row, ci = pivots[i].col;
            int rj = pivots[j].row, cj = pivots[j].col;
            record_row(ri, rj, 1, 1, 0, 1);
            record_col(ci, cj, s, t, -(b / g), a / g);
            record_row(rj, ri, 1, -checked_mul(t, b / g), 0, 1);
            pivots[i].d = g;
            pivots[j].d = checked_mul(a / g, b);
        }
    std::stable_sort(pivots.begin(), pivots.end(),
                     [](const auto& x, const auto& y) { return x.d < y.d; });
}

}   // namespace

SmithDecomposition smith_normal_form(const SparseMatrix& a, const SnfOptions& opts)
{
    Eliminator e(a, opts);
    e.unit_phase();
    e.general_phase();
    e.fix_divisibility();
    SmithDecomposition s;
    s.rows_ = a.rows();
    s.cols_ = a.cols();
    s.pivots_ = std::move(e.pivots);
    s.row_ops_ = std::move(e.row_ops);
    s.col_ops_ = std::move(e.col_ops);
    s.row_ops_recorded_ = opts.record_row_ops;
    s.col_ops_recorded_ = opts.record_col_ops;
    return s;
}

std::optional<std::vector<Int>> solve_integer(const SparseMatrix& a, const std::vector<Int>& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_integer: right-hand side has the wrong length");
    SnfOptions opts;
    opts.record_col_ops = true;
    SmithDecomposition s = smith_normal_form(a, opts);
    std::vector<Int> x = b;
    s.apply_u(x);
    for (int r : s.zero_rows())
        if (x[r] != 0)
            return std::nullopt;
    std::vector<Int> y(static_cast<std::size_t>(a.cols()), 0);
    for (const auto& p : s.pivots())
    {
        if (x[p.row] % p.d != 0)
            return std::nullopt;
        y[p.col] = x[p.row] / p.d;
    }
    s.apply_v(y);
    return y;
}

std::optional<std::vector<Int>> express_in_subgroup(const std::vector<std::vector<Int>>& gens,
                                                    const std::vector<Int>& moduli,
                                                    const std::vector<Int>& w)
{
    const int k = static_cast<int>(moduli.size());
    const int r = static_cast<int>(gens.size());
    SparseMatrix a(k, r + k);
    for (int i = 0; i < r; ++i)
        for (int row = 0; row < k; ++row)
            a.add(row, i, floor_mod(gens[i][row], moduli[row]));
    for (int row = 0; row < k; ++row)
        a.add(row, r + row, moduli[row]);
    std::vector<Int> rhs(static_cast<std::size_t>(k));
    for (int row = 0; row < k; ++row)
        rhs[row] = floor_mod(w[row], moduli[row]);
    auto x = solve_integer(a, rhs);
    if (!x)
        return std::nullopt;
    x->resize(static_cast<std::size_t>(r));
    return x;
}

}   // namespace dwinv
