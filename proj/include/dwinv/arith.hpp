/**
 * Exact scalar arithmetic: checked 64-bit integers, reduced rationals and
 * the torsion group Q/Z with its canonical [0,1) representatives.
 */
#ifndef DWINV_ARITH_HPP
#define DWINV_ARITH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

namespace dwinv {

using Int = std::int64_t;

/// Thrown whenever an exact computation would leave the 64-bit range.
class OverflowError : public std::overflow_error
{
    public:
        using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
/// Floor division and the matching non-negative remainder.
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

/**
 * Extended gcd: returns g = gcd(a, b) >= 0 together with s, t such that
 * s*a + t*b = g.
 */
struct ExtendedGcd
{
    Int g;
    Int s;
    Int t;
};
ExtendedGcd extended_gcd(Int a, Int b);

/// A reduced fraction with positive denominator.
class Rational
{
    public:
        Rational() = default;
        Rational(Int n) : num_(n) {}   // NOLINT(google-explicit-constructor)
        Rational(Int n, Int d);

        Int num() const { return num_; }
        Int den() const { return den_; }
        Int floor() const { return floor_div(num_, den_); }
        bool is_integer() const { return den_ == 1; }

        Rational operator-() const;
        friend Rational operator+(const Rational& a, const Rational& b);
        friend Rational operator-(const Rational& a, const Rational& b);
        friend Rational operator*(const Rational& a, const Rational& b);
        friend Rational operator*(const Rational& a, Int k) { return a * Rational(k); }
        friend Rational operator*(Int k, const Rational& a) { return a * Rational(k); }
        Rational& operator+=(const Rational& o) { return *this = *this + o; }
        Rational& operator-=(const Rational& o) { return *this = *this - o; }

        friend bool operator==(const Rational&, const Rational&) = default;
        friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

        std::string str() const;

    private:
        Int num_ = 0;
        Int den_ = 1;
};

/**
 * An element of Q/Z stored as its representative p/q in [0, 1), reduced.
 *
 * The integer action (n, [a]) -> [n a] is operator*(Int).
 */
class QZ
{
    public:
        QZ() = default;
        QZ(Int n, Int d);
        explicit QZ(const Rational& r) : QZ(r.num(), r.den()) {}

        Int num() const { return num_; }
        Int den() const { return den_; }
        bool is_zero() const { return num_ == 0; }
        /// The canonical lift to Q in [0, 1).
        Rational lift() const { return Rational(num_, den_); }
        /// Additive order of the element.
        Int order() const { return den_; }

        QZ operator-() const;
        friend QZ operator+(const QZ& a, const QZ& b);
        friend QZ operator-(const QZ& a, const QZ& b) { return a + (-b); }
        friend QZ operator*(const QZ& a, Int k);
        friend QZ operator*(Int k, const QZ& a) { return a * k; }
        QZ& operator+=(const QZ& o) { return *this = *this + o; }
        QZ& operator-=(const QZ& o) { return *this = *this - o; }

        friend bool operator==(const QZ&, const QZ&) = default;
        /// Orders by the [0,1) representative.
        friend std::strong_ordering operator<=>(const QZ& a, const QZ& b);

        /// "p/q" with the zero element written "0/1".
        std::string str() const;
        /// Parses "p/q" or an integer; the value is reduced mod 1.
        static QZ parse(const std::string& text);

    private:
        Int num_ = 0;
        Int den_ = 1;
};

/// A residue modulo N, kept in [0, N).
class ModN
{
    public:
        ModN(Int value, Int modulus);
        Int value() const { return value_; }
        Int modulus() const { return modulus_; }
        friend ModN operator+(const ModN& a, const ModN& b);
        friend ModN operator*(const ModN& a, Int k);
        friend bool operator==(const ModN&, const ModN&) = default;

    private:
        Int value_;
        Int modulus_;
};

/// One value of any of the supported coefficient groups.
using CoefficientValue = std::variant<Int, ModN, QZ, Rational>;

std::string to_string(const CoefficientValue& v);

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const QZ& a);

/// Reduce a rational into Q/Z.
inline QZ mod_one(const Rational& r) { return QZ(r); }

}   // namespace dwinv

#endif
