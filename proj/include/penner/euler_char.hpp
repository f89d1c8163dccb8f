// Closed-form orbifold Euler characteristics of moduli spaces of curves,
// complex and real, punctured and unpunctured.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "penner/bernoulli.hpp"
#include "penner/rational.hpp"

namespace penner {

enum class CurveKind { Complex, Real };

inline std::string to_string(CurveKind k) { return k == CurveKind::Complex ? "complex" : "real"; }

/// One table cell: chi for genus index g (complex) or q (real genus 2q)
/// with n punctures.
struct ChiValue {
    CurveKind kind;
    unsigned genus_index;
    unsigned punctures;
    Rational value;

    friend bool operator==(const ChiValue& a, const ChiValue& b) {
        return a.kind == b.kind && a.genus_index == b.genus_index &&
               a.punctures == b.punctures && a.value == b.value;
    }
};

/// chi of the moduli space of genus-g complex curves with n punctures:
///   (-1)^n (2g+n-3)! (2g-1) / ((2g)! n!) * B_{2g},  valid for 2-2g-n < 0.
inline Rational chi_complex(unsigned g, unsigned n) {
    if (n == 0 || 2 >= 2 * g + n)
        throw std::domain_error("chi_complex: requires n > 0 and 2 - 2g - n < 0");
    Rational v(factorial(2 * g + n - 3) * (2 * BigInt(g) - 1),
               factorial(2 * g) * factorial(n));
    v *= bernoulli(2 * g);
    if (n % 2 == 1)
        v = -v;
    return v;
}

/// chi of the moduli space of genus-2q real curves with n punctures:
///   (-1)^n (1/2) (2q+n-2)! (2^{2q-1}-1) / ((2q)! n!) * B_{2q},
/// valid for 1-2q-n < 0. At q = 0 the power 2^{2q-1} is the exact rational 1/2.
inline Rational chi_real(unsigned q, unsigned n) {
    if (n == 0 || 1 >= 2 * q + n)
        throw std::domain_error("chi_real: requires n > 0 and 1 - 2q - n < 0");
    Rational v = Rational(factorial(2 * q + n - 2), factorial(2 * q) * factorial(n));
    v *= pow2(2 * static_cast<long long>(q) - 1) - Rational(1);
    v *= bernoulli(2 * q) * Rational(1, 2);
    if (n % 2 == 1)
        v = -v;
    return v;
}

/// Unpunctured complex value B_{2g} / (2g(2g-2)) for g >= 2. The sphere and
/// torus contributions are logarithmic and live in the continuum builders.
inline Rational chi_complex_unpunctured(unsigned g) {
    if (g < 2)
        throw std::domain_error("chi_complex_unpunctured: requires g >= 2");
    return bernoulli(2 * g) / Rational(BigInt(2 * g) * BigInt(2 * g - 2));
}

/// Unpunctured real value (2^{2k-1}-1)/(2k-1) * B_{2k}/(4k) for k >= 1,
/// i.e. the magnitude of the mu^{1-2k} tail coefficient; the leading minus
/// sign belongs to the continuum series builder.
inline Rational chi_real_unpunctured(unsigned k) {
    if (k == 0)
        throw std::domain_error("chi_real_unpunctured: requires k >= 1");
    return (pow2(2 * static_cast<long long>(k) - 1) - Rational(1)) / Rational(2 * k - 1) *
           bernoulli(2 * k) / Rational(4 * k);
}

/// All in-range values with genus index <= g_max and 1 <= n <= n_max,
/// in row-major (genus, punctures) order; out-of-range cells are omitted.
inline std::vector<ChiValue> chi_table(CurveKind kind, unsigned g_max, unsigned n_max) {
    std::vector<ChiValue> table;
    for (unsigned g = 0; g <= g_max; ++g) {
        for (unsigned n = 1; n <= n_max; ++n) {
            const bool in_range =
                kind == CurveKind::Complex ? (2 * g + n > 2) : (2 * g + n > 1);
            if (!in_range)
                continue;
            const Rational v = kind == CurveKind::Complex ? chi_complex(g, n) : chi_real(g, n);
            table.push_back(ChiValue{kind, g, n, v});
        }
    }
    return table;
}

} // namespace penner
