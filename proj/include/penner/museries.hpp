// Finite sums of c * mu^a * (log mu)^b terms and their term-wise calculus.
#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "penner/rational.hpp"

namespace penner {

/// One term c * mu^a * (log mu)^b with b in {0, 1}. Zero coefficients are
/// never stored inside a MuSeries.
struct MuTerm {
    Rational coeff;
    int mu_power = 0;
    int log_power = 0;

    friend bool operator==(const MuTerm& x, const MuTerm& y) {
        return x.coeff == y.coeff && x.mu_power == y.mu_power && x.log_power == y.log_power;
    }
};

/// Canonical finite mu-series: terms sorted by (mu_power desc, log_power desc),
/// at most one term per (a, b) pair.
class MuSeries {
public:
    MuSeries() = default;

    static MuSeries term(Rational coeff, int mu_power, int log_power) {
        MuSeries s;
        s.add_term(std::move(coeff), mu_power, log_power);
        return s;
    }

    void add_term(Rational coeff, int mu_power, int log_power) {
        if (log_power != 0 && log_power != 1)
            throw std::domain_error("MuSeries: log power must be 0 or 1");
        if (coeff.is_zero())
            return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(mu_power, log_power),
                                   [](const MuTerm& t, const std::pair<int, int>& key) {
                                       return std::make_pair(t.mu_power, t.log_power) >
                                              std::make_pair(key.first, key.second);
                                   });
        if (it != terms_.end() && it->mu_power == mu_power && it->log_power == log_power) {
            it->coeff += coeff;
            if (it->coeff.is_zero())
                terms_.erase(it);
        } else {
            terms_.insert(it, MuTerm{std::move(coeff), mu_power, log_power});
        }
    }

    const std::vector<MuTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int mu_power, int log_power) const {
        for (const auto& t : terms_)
            if (t.mu_power == mu_power && t.log_power == log_power)
                return t.coeff;
        return Rational(0);
    }

    MuSeries& operator+=(const MuSeries& o) {
        for (const auto& t : o.terms_)
            add_term(t.coeff, t.mu_power, t.log_power);
        return *this;
    }
    MuSeries& operator-=(const MuSeries& o) {
        for (const auto& t : o.terms_)
            add_term(-t.coeff, t.mu_power, t.log_power);
        return *this;
    }
    MuSeries& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_)
            t.coeff *= s;
        return *this;
    }

    friend MuSeries operator+(MuSeries a, const MuSeries& b) { return a += b; }
    friend MuSeries operator-(MuSeries a, const MuSeries& b) { return a -= b; }
    friend MuSeries operator*(MuSeries a, const Rational& s) { return a *= s; }
    friend MuSeries operator*(const Rational& s, MuSeries a) { return a *= s; }
    MuSeries operator-() const {
        MuSeries r = *this;
        for (auto& t : r.terms_)
            t.coeff = -t.coeff;
        return r;
    }

    friend bool operator==(const MuSeries& a, const MuSeries& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MuSeries& a, const MuSeries& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            const Rational mag = penner::abs(t.coeff);
            if (first) {
                if (t.coeff.sign() < 0)
                    os << "-";
                first = false;
            } else {
                os << (t.coeff.sign() < 0 ? " - " : " + ");
            }
            os << mag.to_string();
            if (t.mu_power != 0)
                os << "*mu^" << t.mu_power;
            if (t.log_power == 1)
                os << "*log(mu)";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MuSeries& s) {
        return os << s.to_string();
    }

private:
    std::vector<MuTerm> terms_;
};

/// Term-wise derivative: d/dmu [mu^a log mu] = a mu^{a-1} log mu + mu^{a-1},
/// d/dmu [mu^a] = a mu^{a-1}.
inline MuSeries mu_differentiate(const MuSeries& s) {
    MuSeries r;
    for (const auto& t : s.terms()) {
        if (t.log_power == 1) {
            r.add_term(t.coeff * Rational(t.mu_power), t.mu_power - 1, 1);
            r.add_term(t.coeff, t.mu_power - 1, 0);
        } else {
            r.add_term(t.coeff * Rational(t.mu_power), t.mu_power - 1, 0);
        }
    }
    return r;
}

/// Term-wise antiderivative with integration constant zero. Integrating a
/// mu^{-1} log mu term would need (log mu)^2 and is rejected.
inline MuSeries mu_integrate(const MuSeries& s) {
    MuSeries r;
    for (const auto& t : s.terms()) {
        if (t.mu_power == -1) {
            if (t.log_power == 1)
                throw std::domain_error(
                    "mu_integrate: mu^-1 * log(mu) term would produce (log mu)^2");
            r.add_term(t.coeff, 0, 1);
            continue;
        }
        const Rational inv(BigInt(1), BigInt(t.mu_power + 1));
        if (t.log_power == 1) {
            r.add_term(t.coeff * inv, t.mu_power + 1, 1);
            r.add_term(-t.coeff * inv * inv, t.mu_power + 1, 0);
        } else {
            r.add_term(t.coeff * inv, t.mu_power + 1, 0);
        }
    }
    return r;
}

} // namespace penner
