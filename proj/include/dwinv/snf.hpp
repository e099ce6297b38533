/**
 * Smith normal form of sparse integer matrices with logged unimodular
 * row and column operations.
 *
 * The decomposition records U and V as operation sequences so that U A V
 * is zero except for the pivot entries (row_k, col_k) = d_k. Pivots are
 * reported in ascending order of d_k and satisfy d_1 | d_2 | ...
 */
#ifndef DWINV_SNF_HPP
#define DWINV_SNF_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dwinv/arith.hpp"
#include "dwinv/chains.hpp"

namespace dwinv {

class SparseMatrix
{
    public:
        using Row = std::vector<std::pair<int, Int>>;

        SparseMatrix(int rows, int cols);

        /// Adds v to entry (r, c).
        void add(int r, int c, Int v);

        int rows() const { return rows_; }
        int cols() const { return cols_; }
        /// Row r as (column, value) pairs sorted by column, no zeros.
        const Row& row(int r) const { return data_[r]; }
        Int at(int r, int c) const;

        /// Dense product with a column vector.
        std::vector<Int> multiply(const std::vector<Int>& x) const;

    private:
        int rows_;
        int cols_;
        std::vector<Row> data_;
};

/**
 * One 2x2 unimodular operation on lines i and j:
 * (x_i, x_j) <- (a x_i + b x_j, c x_i + d x_j). When i == j it scales
 * line i by a (a = +-1).
 */
struct UnimodularOp
{
    int i;
    int j;
    Int a;
    Int b;
    Int c;
    Int d;
};

struct SnfOptions
{
    bool record_row_ops = true;
    bool record_col_ops = false;
    /// Nonzero seeds randomize pivot tie-breaking.
    std::uint64_t shuffle_seed = 0;
};

class SmithDecomposition
{
    public:
        struct Pivot
        {
            int row;
            int col;
            Int d;
        };

        int rows() const { return rows_; }
        int cols() const { return cols_; }
        int rank() const { return static_cast<int>(pivots_.size()); }
        const std::vector<Pivot>& pivots() const { return pivots_; }
        /// The elementary divisors d_1 | d_2 | ... (nonzero ones only).
        std::vector<Int> divisors() const;
        /// Rows of U A V that are identically zero.
        std::vector<int> zero_rows() const;
        bool has_row_ops() const { return row_ops_recorded_; }
        bool has_col_ops() const { return col_ops_recorded_; }
        std::size_t row_op_count() const { return row_ops_.size(); }
        std::size_t col_op_count() const { return col_ops_.size(); }

        /// x <- U x, for x indexed by rows.
        template <class T> void apply_u(std::vector<T>& x) const;
        /// x <- U^{-1} x.
        template <class T> void apply_u_inverse(std::vector<T>& x) const;
        /// x <- U^T x.
        template <class T> void apply_u_transpose(std::vector<T>& x) const;
        /// y <- V y, for y indexed by columns.
        template <class T> void apply_v(std::vector<T>& y) const;

        /// Rebuilds U A V by replaying the logs and compares with the pivots.
        bool verify(const SparseMatrix& a) const;

    private:
        friend SmithDecomposition smith_normal_form(const SparseMatrix& a, const SnfOptions& opts);

        int rows_ = 0;
        int cols_ = 0;
        std::vector<Pivot> pivots_;
        std::vector<UnimodularOp> row_ops_;
        std::vector<UnimodularOp> col_ops_;
        bool row_ops_recorded_ = false;
        bool col_ops_recorded_ = false;
};

SmithDecomposition smith_normal_form(const SparseMatrix& a, const SnfOptions& opts = {});

/// An integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const SparseMatrix& a, const std::vector<Int>& b);

/**
 * Coefficients a with sum_i a_i gens[i] = w in the group sum_k Z/moduli[k],
 * or nullopt if w is not in the subgroup generated by gens.
 */
std::optional<std::vector<Int>> express_in_subgroup(const std::vector<std::vector<Int>>& gens,
                                                    const std::vector<Int>& moduli,
                                                    const std::vector<Int>& w);

// ------------------------------------------------------------- replaying

namespace detail {

template <class T>
void apply_pair(std::vector<T>& x, int i, int j, Int a, Int b, Int c, Int d)
{
    if (i == j)
    {
        x[i] = scale_value(x[i], a);
        return;
    }
    T xi = x[i];
    T xj = x[j];
    x[i] = add_values(scale_value(xi, a), scale_value(xj, b));
    x[j] = add_values(scale_value(xi, c), scale_value(xj, d));
}

inline Int op_det(const UnimodularOp& op)
{
    if (op.i == op.j)
        return op.a;
    return op.a * op.d - op.b * op.c;
}

}   // namespace detail

template <class T>
void SmithDecomposition::apply_u(std::vector<T>& x) const
{
    if (!row_ops_recorded_)
        throw std::logic_error("row operations were not recorded");
    for (const auto& op : row_ops_)
        detail::apply_pair(x, op.i, op.j, op.a, op.b, op.c, op.d);
}

template <class T>
void SmithDecomposition::apply_u_inverse(std::vector<T>& x) const
{
    if (!row_ops_recorded_)
        throw std::logic_error("row operations were not recorded");
    for (auto it = row_ops_.rbegin(); it != row_ops_.rend(); ++it)
    {
        const auto& op = *it;
        Int e = detail::op_det(op);
        if (op.i == op.j)
            detail::apply_pair(x, op.i, op.j, op.a, 0, 0, 0);
        else
            detail::apply_pair(x, op.i, op.j, e * op.d, -e * op.b, -e * op.c, e * op.a);
    }
}

template <class T>
void SmithDecomposition::apply_u_transpose(std::vector<T>& x) const
{
    if (!row_ops_recorded_)
        throw std::logic_error("row operations were not recorded");
    for (auto it = row_ops_.rbegin(); it != row_ops_.rend(); ++it)
        detail::apply_pair(x, it->i, it->j, it->a, it->c, it->b, it->d);
}

template <class T>
void SmithDecomposition::apply_v(std::vector<T>& y) const
{
    if (!col_ops_recorded_)
        throw std::logic_error("column operations were not recorded");
    for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it)
        detail::apply_pair(y, it->i, it->j, it->a, it->c, it->b, it->d);
}

}   // namespace dwinv

#endif
