// Dense polynomials in the symbolic matrix size N, rational coefficients.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "penner/rational.hpp"

namespace penner {

/// Polynomial in N with Rational coefficients, stored densely by degree.
/// Canonical form: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient list and degree() == -1.
class NPoly {
public:
    NPoly() = default;
    explicit NPoly(Rational constant) {
        if (!constant.is_zero())
            c_.push_back(std::move(constant));
    }
    explicit NPoly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
        strip();
    }
    NPoly(std::initializer_list<Rational> ascending_coeffs)
        : NPoly(std::vector<Rational>(ascending_coeffs)) {}

    static NPoly monomial(unsigned degree, Rational coeff) {
        NPoly p;
        if (!coeff.is_zero()) {
            p.c_.assign(degree + 1, Rational(0));
            p.c_[degree] = std::move(coeff);
        }
        return p;
    }
    static NPoly variable() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    NPoly& operator+=(const NPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        strip();
        return *this;
    }
    NPoly& operator-=(const NPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        strip();
        return *this;
    }
    NPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_)
            c *= s;
        return *this;
    }

    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    friend NPoly operator*(NPoly a, const Rational& s) { return a *= s; }
    friend NPoly operator*(const Rational& s, NPoly a) { return a *= s; }
    NPoly operator-() const {
        NPoly p = *this;
        for (auto& c : p.c_)
            c = -c;
        return p;
    }

    friend NPoly operator*(const NPoly& a, const NPoly& b) {
        if (a.is_zero() || b.is_zero())
            return NPoly();
        NPoly p;
        p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                p.c_[i + j] += a.c_[i] * b.c_[j];
        p.strip();
        return p;
    }
    NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

    friend bool operator==(const NPoly& a, const NPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const NPoly& a, const NPoly& b) { return !(a == b); }

    /// Horner evaluation at a rational point.
    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (std::size_t k = c_.size(); k-- > 0;)
            r = r * x + c_[k];
        return r;
    }
    Rational eval(const BigInt& n) const { return eval(Rational(n)); }
    Rational eval(long long n) const { return eval(Rational(n)); }

    /// p(a*N + b), by Horner over polynomial arithmetic.
    NPoly compose_linear(const Rational& a, const Rational& b) const {
        const NPoly arg{b, a}; // b + a*N
        NPoly r;
        for (std::size_t k = c_.size(); k-- > 0;)
            r = r * arg + NPoly(c_[k]);
        return r;
    }

    /// Human-readable form, highest degree first, e.g. "1/6*N^3 - 1/12*N".
    std::string to_string() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero())
                continue;
            const Rational mag = penner::abs(c_[k]);
            if (first) {
                if (c_[k].sign() < 0)
                    os << "-";
                first = false;
            } else {
                os << (c_[k].sign() < 0 ? " - " : " + ");
            }
            if (k == 0 || mag != Rational(1))
                os << mag.to_string();
            if (k > 0) {
                if (mag != Rational(1))
                    os << "*";
                os << "N";
                if (k > 1)
                    os << "^" << k;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const NPoly& p) {
        return os << p.to_string();
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace penner
