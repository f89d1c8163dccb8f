// Closed-form power sums as polynomials in the upper limit.
#pragma once

#include <stdexcept>

#include "penner/bernoulli.hpp"
#include "penner/npoly.hpp"

namespace penner {

/// P_m with P_m(n) = sum_{p=1}^{n} p^m:
///   N^{m+1}/(m+1) + N^m/2 + sum_{k=1}^{floor(m/2)} C(m,2k-1) * B_{2k}/(2k) * N^{m+1-2k}
inline NPoly faulhaber(unsigned m) {
    if (m == 0)
        throw std::domain_error("faulhaber: m must be >= 1");
    NPoly p = NPoly::monomial(m + 1, Rational(BigInt(1), BigInt(m + 1)));
    p += NPoly::monomial(m, Rational(1, 2));
    for (unsigned k = 1; 2 * k <= m; ++k)
        p += NPoly::monomial(m + 1 - 2 * k,
                             Rational(binomial(m, 2 * k - 1)) * bernoulli(2 * k) /
                                 Rational(2 * k));
    return p;
}

/// Q_m with Q_m(n) = sum over odd p in [1, 2n-1] of p^m, lifted to a polynomial
/// via Q_m(N) = P_m(2N) - 2^m * P_m(N). The two N^m/2 middle terms cancel; the
/// degree-m coefficient of the result is checked to be exactly zero.
inline NPoly odd_power_sum(unsigned m) {
    if (m == 0)
        throw std::domain_error("odd_power_sum: m must be >= 1");
    const NPoly p = faulhaber(m);
    NPoly q = p.compose_linear(2, 0) - pow2(m) * p;
    if (!q.coeff(m).is_zero())
        throw std::logic_error("odd_power_sum: middle terms failed to cancel");
    return q;
}

} // namespace penner
