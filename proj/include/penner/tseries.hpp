// Truncated formal power series in the coupling t, NPoly coefficients.
#pragma once

#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "penner/npoly.hpp"

namespace penner {

/// Formal power series sum_{k=0}^{M} c_k(N) t^k, truncated at a fixed order M.
/// Arithmetic never consults powers above M and preserves the order.
class TSeries {
public:
    explicit TSeries(int order) : order_(order) {
        if (order < 0)
            throw std::invalid_argument("TSeries: negative order");
        c_.assign(static_cast<std::size_t>(order) + 1, NPoly());
    }

    int order() const { return order_; }
    const NPoly& coeff(int k) const {
        check_power(k);
        return c_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, NPoly p) {
        check_power(k);
        c_[static_cast<std::size_t>(k)] = std::move(p);
    }
    void add_to_coeff(int k, const NPoly& p) {
        check_power(k);
        c_[static_cast<std::size_t>(k)] += p;
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero())
                return false;
        return true;
    }

    TSeries& operator+=(const TSeries& o) {
        check_same_order(o);
        for (int k = 0; k <= order_; ++k)
            c_[k] += o.c_[k];
        return *this;
    }
    TSeries& operator-=(const TSeries& o) {
        check_same_order(o);
        for (int k = 0; k <= order_; ++k)
            c_[k] -= o.c_[k];
        return *this;
    }
    TSeries& operator*=(const Rational& s) {
        for (auto& p : c_)
            p *= s;
        return *this;
    }

    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(TSeries a, const Rational& s) { return a *= s; }
    friend TSeries operator*(const Rational& s, TSeries a) { return a *= s; }
    TSeries operator-() const {
        TSeries r = *this;
        for (auto& p : r.c_)
            p = -p;
        return r;
    }

    /// Truncated Cauchy product: powers above the common order are dropped.
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check_same_order(b);
        TSeries r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (int j = 0; i + j <= a.order_; ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

    TSeries truncate(int new_order) const {
        if (new_order > order_)
            throw std::invalid_argument("TSeries: cannot truncate upward");
        TSeries r(new_order);
        for (int k = 0; k <= new_order; ++k)
            r.c_[k] = c_[k];
        return r;
    }

    TSeries transformed(const std::function<NPoly(const NPoly&)>& fn) const {
        TSeries r(order_);
        for (int k = 0; k <= order_; ++k)
            r.c_[k] = fn(c_[k]);
        return r;
    }

    /// Evaluate every coefficient at a concrete matrix size.
    TSeries eval_at_size(long long n) const {
        return transformed([&](const NPoly& p) { return NPoly(p.eval(n)); });
    }

    /// Substitute N -> scale*N in every coefficient.
    TSeries scale_size(long long scale) const {
        return transformed([&](const NPoly& p) { return p.compose_linear(Rational(scale), 0); });
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            if (c_[k].is_zero())
                continue;
            if (!first)
                os << " + ";
            os << "(" << c_[k].to_string() << ")*t^" << k;
            first = false;
        }
        return first ? "0" : os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const TSeries& s) {
        return os << s.to_string();
    }

private:
    void check_power(int k) const {
        if (k < 0 || k > order_)
            throw std::out_of_range("TSeries: power out of range");
    }
    void check_same_order(const TSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("TSeries: order mismatch");
    }

    int order_;
    std::vector<NPoly> c_;
};

/// Truncation of log(1 + c*t): sum_{m=1}^{M} (-1)^{m-1} c^m t^m / m.
inline TSeries tseries_log_one_plus(const Rational& c, int order) {
    if (order < 1)
        throw std::invalid_argument("tseries_log_one_plus: order must be >= 1");
    TSeries s(order);
    Rational cm = 1;
    for (int m = 1; m <= order; ++m) {
        cm *= c;
        Rational term = cm / Rational(m);
        if (m % 2 == 0)
            term = -term;
        s.set_coeff(m, NPoly(term));
    }
    return s;
}

} // namespace penner
