// Bernoulli numbers, exact, cached.
#pragma once

#include <mutex>
#include <vector>

#include "penner/rational.hpp"

namespace penner {

/// B_m in the convention B_1 = -1/2, from the defining recurrence
/// sum_{k=0}^{m} C(m+1,k) B_k = 0. Values are memoized; safe to call
/// from multiple threads.
inline Rational bernoulli(unsigned m) {
    static std::mutex mtx;
    static std::vector<Rational> cache{Rational(1)}; // B_0

    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= m) {
        const unsigned j = static_cast<unsigned>(cache.size());
        Rational acc = 0;
        for (unsigned k = 0; k < j; ++k)
            acc += Rational(binomial(j + 1, k)) * cache[k];
        cache.push_back(-acc / Rational(j + 1));
    }
    return cache[m];
}

} // namespace penner
