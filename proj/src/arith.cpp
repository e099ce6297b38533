#include "dwinv/arith.hpp"

#include <charconv>
#include <ostream>

namespace dwinv {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0)
    {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0)
        return 0;
    Int g = gcd(a, b);
    Int r = checked_mul(a / g, b);
    return r < 0 ? -r : r;
}

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int floor_mod(Int a, Int b)
{
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        r += b;
    return r;
}

ExtendedGcd extended_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0)
    {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Int mod_inverse(Int a, Int m)
{
    if (m == 1)
        return 0;
    auto e = extended_gcd(floor_mod(a, m), m);
    if (e.g != 1)
        throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not invertible mod "
                                + std::to_string(m));
    return floor_mod(e.s, m);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(Int n, Int d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    if (d < 0)
    {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    Int g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational operator+(const Rational& a, const Rational& b)
{
    Int g = gcd(a.den_, b.den_);
    Int da = a.den_ / g;
    Int db = b.den_ / g;
    return Rational(checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da)),
                    checked_mul(a.den_, db));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    Int g1 = gcd(a.num_, b.den_);
    Int g2 = gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------- QZ

QZ::QZ(Int n, Int d)
{
    if (d == 0)
        throw std::domain_error("QZ: zero denominator");
    if (d < 0)
    {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    n = floor_mod(n, d);
    Int g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

QZ QZ::operator-() const
{
    if (num_ == 0)
        return *this;
    QZ r;
    r.num_ = den_ - num_;
    r.den_ = den_;
    return r;
}

QZ operator+(const QZ& a, const QZ& b)
{
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Int g = gcd(a.den_, b.den_);
    Int da = a.den_ / g;
    Int db = b.den_ / g;
    Int den = checked_mul(a.den_, db);
    // Both numerators are < their denominators, so the sum is < 2*den.
    Int num = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
    return QZ(num, den);
}

QZ operator*(const QZ& a, Int k)
{
    if (a.num_ == 0 || k == 0)
        return QZ();
    Int kk = floor_mod(k, a.den_);
    return QZ(checked_mul(a.num_, kk), a.den_);
}

std::strong_ordering operator<=>(const QZ& a, const QZ& b)
{
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string QZ::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ QZ::parse(const std::string& text)
{
    auto parse_int = [&](std::string_view s) {
        Int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw std::invalid_argument("malformed Q/Z value '" + text + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return QZ(parse_int(text), 1);
    std::string_view sv(text);
    return QZ(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

// -------------------------------------------------------------------- ModN

ModN::ModN(Int value, Int modulus) : value_(0), modulus_(modulus)
{
    if (modulus <= 0)
        throw std::domain_error("ModN: modulus must be positive");
    value_ = floor_mod(value, modulus);
}

ModN operator+(const ModN& a, const ModN& b)
{
    if (a.modulus_ != b.modulus_)
        throw std::invalid_argument("ModN: modulus mismatch");
    return ModN(checked_add(a.value_, b.value_), a.modulus_);
}

ModN operator*(const ModN& a, Int k)
{
    return ModN(checked_mul(a.value_, floor_mod(k, a.modulus_)), a.modulus_);
}

std::string to_string(const CoefficientValue& v)
{
    struct Visitor
    {
        std::string operator()(Int x) const { return std::to_string(x); }
        std::string operator()(const ModN& x) const
        {
            return std::to_string(x.value()) + " mod " + std::to_string(x.modulus());
        }
        std::string operator()(const QZ& x) const { return x.str(); }
        std::string operator()(const Rational& x) const { return x.str(); }
    };
    return std::visit(Visitor{}, v);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const QZ& a) { return os << a.str(); }

}   // namespace dwinv
