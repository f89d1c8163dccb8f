// Exact arbitrary-precision rational arithmetic and big-integer helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace penner {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always held in canonical form: denominator > 0,
/// gcd(|num|, den) == 1, zero is 0/1. Backed by boost::multiprecision.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_.assign(boost::multiprecision::cpp_rational(num, den));
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer power; negative exponents invert, 0^0 == 1.
    Rational pow(long long e) const {
        if (e < 0) {
            if (is_zero())
                throw std::domain_error("Rational: negative power of zero");
            return Rational(denominator(), numerator()).pow(-e);
        }
        Rational base = *this, result = 1;
        while (e > 0) {
            if (e & 1)
                result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    double to_double() const { return v_.convert_to<double>(); }

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const { return v_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static BigInt parse_int(std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("Rational: empty integer field");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("Rational: sign without digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: bad integer '" + std::string(s) + "'");
        return BigInt(std::string(s));
    }

    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt b = 1;
    for (unsigned j = 1; j <= k; ++j) {
        b *= n - k + j;
        b /= j;
    }
    return b;
}

/// 2^e as an exact rational; e may be negative (2^-1 == 1/2).
inline Rational pow2(long long e) { return Rational(2).pow(e); }

} // namespace penner
