#include "doctest.h"

#include "dwinv/snf.hpp"
#include "support.hpp"

using namespace dwinv;
using testing::Rng;

namespace {

SparseMatrix random_matrix(int rows, int cols, double density, Int bound, Rng& rng)
{
    SparseMatrix a(rows, cols);
    std::bernoulli_distribution keep(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (keep(rng))
                a.add(r, c, testing::uniform(rng, -bound, bound));
    return a;
}

/// Rank and determinant by Gaussian elimination over Q.
std::pair<int, Rational> rank_and_det(const SparseMatrix& a)
{
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            m[r][c] = Rational(a.at(r, c));
    int rank = 0;
    Rational det(1);
    for (int c = 0; c < a.cols() && rank < a.rows(); ++c)
    {
        int p = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (m[r][c].num() != 0)
            {
                p = r;
                break;
            }
        if (p < 0)
        {
            det = Rational(0);
            continue;
        }
        std::swap(m[p], m[rank]);
        det = det * m[rank][c];
        for (int r = rank + 1; r < a.rows(); ++r)
        {
            if (m[r][c].num() == 0)
                continue;
            Rational f = m[r][c] * Rational(m[rank][c].den(), m[rank][c].num());
            for (int k = c; k < a.cols(); ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return {rank, det};
}

Int content(const SparseMatrix& a)
{
    Int g = 0;
    for (int r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row(r))
            g = gcd(g, v);
    return g;
}

}   // namespace

TEST_CASE("Smith form of a small matrix by hand")
{
    SparseMatrix a(2, 2);
    a.add(0, 0, 2);
    a.add(0, 1, 4);
    a.add(1, 0, 6);
    a.add(1, 1, 8);
    auto s = smith_normal_form(a, {true, true, 0});
    CHECK(s.divisors() == std::vector<Int>{2, 4});
    CHECK(s.verify(a));
}

TEST_CASE("Smith forms of random matrices against elimination oracles")
{
    Rng rng(41);
    for (int t = 0; t < 120; ++t)
    {
        int rows = static_cast<int>(testing::uniform(rng, 1, 9));
        int cols = static_cast<int>(testing::uniform(rng, 1, 9));
        SparseMatrix a = random_matrix(rows, cols, 0.5, 6, rng);
        auto s = smith_normal_form(a, {true, true, static_cast<std::uint64_t>(t)});
        REQUIRE(s.verify(a));
        auto d = s.divisors();
        for (std::size_t k = 1; k < d.size(); ++k)
            CHECK(d[k] % d[k - 1] == 0);
        auto [rank, det] = rank_and_det(a);
        CHECK(s.rank() == rank);
        if (!d.empty())
            CHECK(d.front() == content(a));
        if (rows == cols && rank == rows)
        {
            Int prod = 1;
            for (Int x : d)
                prod *= x;
            CHECK(Rational(prod) == (det.num() < 0 ? -det : det));
        }
    }
}

TEST_CASE("U and its inverse and transpose are consistent")
{
    Rng rng(42);
    SparseMatrix a = random_matrix(6, 5, 0.6, 5, rng);
    auto s = smith_normal_form(a);
    for (int t = 0; t < 20; ++t)
    {
        std::vector<Int> x(6), y(6);
        for (auto& v : x)
            v = testing::uniform(rng, -5, 5);
        for (auto& v : y)
            v = testing::uniform(rng, -5, 5);
        auto ux = x;
        s.apply_u(ux);
        auto back = ux;
        s.apply_u_inverse(back);
        CHECK(back == x);
        auto uty = y;
        s.apply_u_transpose(uty);
        Int lhs = 0, rhs = 0;
        for (int i = 0; i < 6; ++i)
        {
            lhs += ux[i] * y[i];
            rhs += x[i] * uty[i];
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("integer linear systems")
{
    Rng rng(43);
    for (int t = 0; t < 50; ++t)
    {
        SparseMatrix a = random_matrix(5, 4, 0.6, 4, rng);
        std::vector<Int> x(4);
        for (auto& v : x)
            v = testing::uniform(rng, -3, 3);
        auto b = a.multiply(x);
        auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.multiply(*sol) == b);
    }
    SparseMatrix two(1, 1);
    two.add(0, 0, 2);
    CHECK(!solve_integer(two, {1}).has_value());
    CHECK(solve_integer(two, {4}).value() == std::vector<Int>{2});
}

TEST_CASE("membership in subgroups of finite abelian groups matches enumeration")
{
    Rng rng(44);
    const std::vector<Int> moduli{4, 6};
    for (int t = 0; t < 40; ++t)
    {
        std::vector<std::vector<Int>> gens(2, std::vector<Int>(2));
        for (auto& g : gens)
            for (std::size_t k = 0; k < 2; ++k)
                g[k] = testing::uniform(rng, 0, moduli[k] - 1);
        std::vector<std::vector<char>> reach(4, std::vector<char>(6, 0));
        for (Int a = 0; a < 12; ++a)
            for (Int b = 0; b < 12; ++b)
                reach[(a * gens[0][0] + b * gens[1][0]) % 4][(a * gens[0][1] + b * gens[1][1]) % 6] = 1;
        for (Int u = 0; u < 4; ++u)
            for (Int v = 0; v < 6; ++v)
            {
                auto c = express_in_subgroup(gens, moduli, {u, v});
                CHECK(c.has_value() == static_cast<bool>(reach[u][v]));
                if (c)
                {
                    CHECK(floor_mod((*c)[0] * gens[0][0] + (*c)[1] * gens[1][0] - u, 4) == 0);
                    CHECK(floor_mod((*c)[0] * gens[0][1] + (*c)[1] * gens[1][1] - v, 6) == 0);
                }
            }
    }
}
