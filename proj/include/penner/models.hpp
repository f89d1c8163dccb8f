// Generating-function builders for the Penner-type matrix models: the exact
// triple-sum free energy, the genus expansions over complex and real Euler
// characteristics, the odd-product expansion and the closed-form expansion.
#pragma once

#include <stdexcept>
#include <string>

#include "penner/bernoulli.hpp"
#include "penner/power_sums.hpp"
#include "penner/tseries.hpp"

namespace penner {

/// Matrix size: either a concrete positive integer or the symbolic N.
class MatrixSize {
public:
    static MatrixSize symbolic() { return MatrixSize(true, 0); }
    static MatrixSize of(long long n) {
        if (n < 1)
            throw std::domain_error("MatrixSize: concrete size must be >= 1");
        return MatrixSize(false, n);
    }

    bool is_symbolic() const { return symbolic_; }
    long long value() const {
        if (symbolic_)
            throw std::logic_error("MatrixSize: symbolic size has no value");
        return n_;
    }
    MatrixSize doubled() const { return symbolic_ ? *this : of(2 * n_); }

    std::string to_string() const { return symbolic_ ? "sym" : std::to_string(n_); }

private:
    MatrixSize(bool symbolic, long long n) : symbolic_(symbolic), n_(n) {}
    bool symbolic_;
    long long n_;
};

enum class ModelId {
    HermitianTriple,      // triple-sum free energy at alpha = 1
    SymplecticTriple,     // triple-sum free energy at alpha = 2
    HermitianGF,          // genus expansion over complex chi
    SymplecticGF,         // half orientable (doubled size) minus half real tower
    OrthogonalGF,         // half orientable (doubled size) plus half real tower
    NonorientableProduct, // log prod_{p odd <= 2N-1} (1 + p t)
    NonorientableGF,      // log prod_{p odd <= 2N-1} (1 + p t)^{-1/2} as a (q, n) sum
    PennerClosedForm,     // expansion of the closed-form partition function log
    StirlingTail,         // Bernoulli tail of log Gamma(1/t)
};

/// Reading of the closed form's prefactor: as printed, or with the
/// gamma-function factor inverted (which flips the sign of the Stirling tail).
enum class Orientation { AsPrinted, Reciprocal };

inline std::string to_string(Orientation o) {
    return o == Orientation::AsPrinted ? "as_printed" : "reciprocal";
}

namespace detail {

/// scale^n * N^n for the given size (symbolic monomial or concrete constant).
inline NPoly size_power(const MatrixSize& size, unsigned n, long long scale) {
    const Rational s = Rational(scale).pow(n);
    if (size.is_symbolic())
        return NPoly::monomial(n, s);
    return NPoly(s * Rational(size.value()).pow(n));
}

inline NPoly size_linear(const MatrixSize& size, const Rational& coeff) {
    if (size.is_symbolic())
        return NPoly::monomial(1, coeff);
    return NPoly(coeff * Rational(size.value()));
}

/// The real-curve double sum without any prefactor:
///   D = sum over q >= 0, n > 0, 1-2q-n < 0 of
///       (2q+n-2)! (2^{2q-1}-1) / ((2q)! n!) * B_{2q} * (2N)^n * (-t)^{2q+n-1}.
inline TSeries real_tower(const MatrixSize& size, int order) {
    TSeries s(order);
    for (int m = 1; m <= order; ++m) {
        NPoly c;
        for (unsigned q = 0; static_cast<int>(2 * q) <= m; ++q) {
            const unsigned n = static_cast<unsigned>(m + 1 - 2 * static_cast<int>(q));
            if (n < 1 || 2 * q + n <= 1)
                continue;
            Rational w(factorial(2 * q + n - 2), factorial(2 * q) * factorial(n));
            w *= pow2(2 * static_cast<long long>(q) - 1) - Rational(1);
            w *= bernoulli(2 * q);
            if (m % 2 == 1)
                w = -w;
            c += w * size_power(size, n, 2);
        }
        s.set_coeff(m, c);
    }
    return s;
}

} // namespace detail

/// Bernoulli tail of log Gamma(1/t) after the non-power pieces are removed:
///   sum over m with 2m-1 <= M of B_{2m} / (2m(2m-1)) * t^{2m-1}.
inline TSeries stirling_tail_series(int order) {
    if (order < 1)
        throw std::invalid_argument("stirling_tail_series: order must be >= 1");
    TSeries s(order);
    for (int m = 1; 2 * m - 1 <= order; ++m)
        s.set_coeff(2 * m - 1,
                    NPoly(bernoulli(2 * m) / Rational(BigInt(2 * m) * BigInt(2 * m - 1))));
    return s;
}

/// Exact free energy as a triple sum, for alpha in {1, 2}:
///   N * sum_m B_{2m}/(2m(2m-1)) t^{2m-1}
///   + sum_m (-1)^{m-1}/m * [sum_{i=0}^{N-1} sum_{j=1}^{alpha} (N-1-i)(i alpha + j)^m] t^m.
/// The symbolic route expands (i alpha + j)^m binomially and reduces the i-sum
/// with Faulhaber polynomials; a concrete size is summed directly.
inline TSeries free_energy_series(int alpha, const MatrixSize& size, int order) {
    if (alpha != 1 && alpha != 2)
        throw std::domain_error("free_energy_series: alpha must be 1 or 2");
    if (order < 1)
        throw std::invalid_argument("free_energy_series: order must be >= 1");

    TSeries s = stirling_tail_series(order).transformed(
        [&](const NPoly& p) { return p.is_zero() ? p : detail::size_linear(size, p.coeff(0)); });

    for (int m = 1; m <= order; ++m) {
        NPoly inner;
        if (size.is_symbolic()) {
            // sum_i (N-1-i) i^b = (N-1) * sum_{i=0}^{N-1} i^b - sum_{i=1}^{N-1} i^{b+1}
            const NPoly shift = NPoly::variable() - NPoly(Rational(1)); // N - 1
            for (int b = 0; b <= m; ++b) {
                Rational j_sum = 0; // sum_{j=1}^{alpha} j^{m-b}
                for (int j = 1; j <= alpha; ++j)
                    j_sum += Rational(j).pow(m - b);
                NPoly i_zero_to = b == 0 ? shift + NPoly(Rational(1))
                                         : faulhaber(b).compose_linear(1, -1);
                NPoly g = shift * i_zero_to - faulhaber(b + 1).compose_linear(1, -1);
                g *= Rational(binomial(m, b)) * Rational(alpha).pow(b) * j_sum;
                inner += g;
            }
        } else {
            const long long n = size.value();
            BigInt total = 0;
            for (long long i = 0; i < n; ++i) {
                BigInt base_pow;
                for (int j = 1; j <= alpha; ++j) {
                    base_pow = 1;
                    const BigInt base = BigInt(i) * alpha + j;
                    for (int e = 0; e < m; ++e)
                        base_pow *= base;
                    total += BigInt(n - 1 - i) * base_pow;
                }
            }
            inner = NPoly(Rational(total));
        }
        Rational w(BigInt(m % 2 == 1 ? 1 : -1), BigInt(m));
        s.add_to_coeff(m, w * inner);
    }
    return s;
}

/// Genus expansion over complex Euler characteristics:
///   sum over g >= 0, n > 0, 2-2g-n < 0, 2g+n-2 <= M of
///   (2g+n-3)! (2g-1) / ((2g)! n!) * B_{2g} * N^n * (-t)^{2g+n-2}.
inline TSeries hermitian_gf_series(const MatrixSize& size, int order) {
    if (order < 0)
        throw std::invalid_argument("hermitian_gf_series: order must be >= 0");
    TSeries s(order);
    for (int m = 1; m <= order; ++m) {
        NPoly c;
        for (unsigned g = 0; static_cast<int>(2 * g) <= m + 1; ++g) {
            const int n_signed = m + 2 - 2 * static_cast<int>(g);
            if (n_signed < 1)
                continue;
            const unsigned n = static_cast<unsigned>(n_signed);
            if (2 * g + n <= 2)
                continue;
            Rational w(factorial(2 * g + n - 3) * (2 * BigInt(g) - 1),
                       factorial(2 * g) * factorial(n));
            w *= bernoulli(2 * g);
            if (m % 2 == 1)
                w = -w;
            c += w * detail::size_power(size, n, 1);
        }
        s.set_coeff(m, c);
    }
    return s;
}

/// Half the doubled-size orientable expansion minus half the real tower.
inline TSeries symplectic_gf_series(const MatrixSize& size, int order) {
    if (order < 1)
        throw std::invalid_argument("symplectic_gf_series: order must be >= 1");
    TSeries a = size.is_symbolic() ? hermitian_gf_series(size, order).scale_size(2)
                                   : hermitian_gf_series(size.doubled(), order);
    return Rational(1, 2) * (a - detail::real_tower(size, order));
}

/// Half the doubled-size orientable expansion plus half the real tower.
inline TSeries orthogonal_gf_series(const MatrixSize& size, int order) {
    if (order < 1)
        throw std::invalid_argument("orthogonal_gf_series: order must be >= 1");
    TSeries a = size.is_symbolic() ? hermitian_gf_series(size, order).scale_size(2)
                                   : hermitian_gf_series(size.doubled(), order);
    return Rational(1, 2) * (a + detail::real_tower(size, order));
}

/// log prod_{p odd, 1 <= p <= 2N-1} (1 + p t) via the odd power sums:
///   sum_{m=1}^{M} (-1)^{m-1}/m * Q_m(N) * t^m.
inline TSeries nonorientable_product_series(const MatrixSize& size, int order) {
    if (order < 1)
        throw std::invalid_argument("nonorientable_product_series: order must be >= 1");
    TSeries s(order);
    for (int m = 1; m <= order; ++m) {
        NPoly q = odd_power_sum(static_cast<unsigned>(m));
        if (!size.is_symbolic())
            q = NPoly(q.eval(size.value()));
        q *= Rational(BigInt(m % 2 == 1 ? 1 : -1), BigInt(m));
        s.set_coeff(m, q);
    }
    return s;
}

/// log prod_{p odd, 1 <= p <= 2N-1} (1 + p t)^{-1/2} as the (q, n) double sum:
/// -1/2 times the real tower. Times (-2) this is exactly the product series.
inline TSeries nonorientable_gf_series(const MatrixSize& size, int order) {
    if (order < 1)
        throw std::invalid_argument("nonorientable_gf_series: order must be >= 1");
    return Rational(-1, 2) * detail::real_tower(size, order);
}

/// t-power part of the log of the closed-form partition function at concrete N:
///   (+/-) N * stirling_tail + sum_{p=1}^{N} (N - p) log(1 + p t),
/// keeping only genuine powers of t (constants, log t and 1/t pieces dropped).
/// The tail sign is + for Orientation::Reciprocal and - for AsPrinted.
inline TSeries penner_closed_form_series(const MatrixSize& size, int order,
                                         Orientation orientation) {
    if (size.is_symbolic())
        throw std::domain_error("penner_closed_form_series: size must be concrete");
    if (order < 1)
        throw std::invalid_argument("penner_closed_form_series: order must be >= 1");
    const long long n = size.value();
    TSeries s = Rational(n) * stirling_tail_series(order);
    if (orientation == Orientation::AsPrinted)
        s = -s;
    for (long long p = 1; p <= n; ++p)
        s += Rational(n - p) * tseries_log_one_plus(Rational(p), order);
    return s;
}

} // namespace penner
