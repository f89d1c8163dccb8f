#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "penner/tseries.hpp"

using penner::NPoly;
using penner::Rational;
using penner::TSeries;

namespace {

TSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    TSeries s(order);
    for (int k = 0; k <= order; ++k) {
        NPoly p;
        const int d = deg(rng);
        for (int j = 0; j <= d; ++j)
            p += NPoly::monomial(j, Rational(num(rng), den(rng)));
        s.set_coeff(k, p);
    }
    return s;
}

// independent truncated convolution, written against the coefficient lists
TSeries convolve_reference(const TSeries& a, const TSeries& b) {
    TSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) {
        NPoly acc;
        for (int i = 0; i <= k; ++i)
            acc += a.coeff(i) * b.coeff(k - i);
        r.set_coeff(k, acc);
    }
    return r;
}

} // namespace

TEST_CASE("tseries_log_one_plus") {
    const TSeries mercator = penner::tseries_log_one_plus(Rational(1), 3);
    REQUIRE(mercator.coeff(0).is_zero());
    REQUIRE(mercator.coeff(1) == NPoly(Rational(1)));
    REQUIRE(mercator.coeff(2) == NPoly(Rational(-1, 2)));
    REQUIRE(mercator.coeff(3) == NPoly(Rational(1, 3)));

    REQUIRE(penner::tseries_log_one_plus(Rational(0), 5).is_zero());

    const TSeries two = penner::tseries_log_one_plus(Rational(2), 2);
    REQUIRE(two.coeff(1) == NPoly(Rational(2)));
    REQUIRE(two.coeff(2) == NPoly(Rational(-2)));

    REQUIRE_THROWS_AS(penner::tseries_log_one_plus(Rational(1), 0), std::invalid_argument);
}

TEST_CASE("TSeries multiplication matches reference convolution") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const TSeries a = random_series(rng, 8), b = random_series(rng, 8);
        REQUIRE(a * b == convolve_reference(a, b));
        REQUIRE(a * b == b * a);
    }
}

TEST_CASE("TSeries truncation is idempotent and order-safe") {
    std::mt19937_64 rng(17);
    const TSeries s = random_series(rng, 10);
    const TSeries t5 = s.truncate(5);
    REQUIRE(t5.order() == 5);
    REQUIRE(t5.truncate(5) == t5);
    for (int k = 0; k <= 5; ++k)
        REQUIRE(t5.coeff(k) == s.coeff(k));
    REQUIRE_THROWS_AS(t5.truncate(6), std::invalid_argument);

    const TSeries other(7);
    REQUIRE_THROWS_AS(s + other, std::invalid_argument);
    REQUIRE_THROWS_AS(s * other, std::invalid_argument);
}

TEST_CASE("TSeries size substitution") {
    std::mt19937_64 rng(23);
    const TSeries s = random_series(rng, 6);
    const TSeries doubled = s.scale_size(2);
    for (long long n = 1; n <= 4; ++n)
        REQUIRE(doubled.eval_at_size(n) == s.eval_at_size(2 * n));
}

TEST_CASE("TSeries linearity") {
    std::mt19937_64 rng(31);
    const TSeries a = random_series(rng, 6), b = random_series(rng, 6);
    const Rational c(3, 7);
    REQUIRE(c * (a + b) == c * a + c * b);
    REQUIRE((a - a).is_zero());
}
