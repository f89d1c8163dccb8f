#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "penner/museries.hpp"

using penner::MuSeries;
using penner::Rational;

namespace {

MuSeries random_series(std::mt19937_64& rng, bool allow_log_at_minus_one) {
    std::uniform_int_distribution<int> count(1, 8);
    std::uniform_int_distribution<int> power(-6, 6);
    std::uniform_int_distribution<int> logp(0, 1);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    MuSeries s;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int a = power(rng);
        const int b = logp(rng);
        if (!allow_log_at_minus_one && a == -1 && b == 1)
            continue;
        s.add_term(Rational(num(rng), den(rng)), a, b);
    }
    return s;
}

} // namespace

TEST_CASE("MuSeries canonical form") {
    MuSeries s;
    s.add_term(Rational(1, 2), -2, 0);
    s.add_term(Rational(1, 3), 2, 1);
    s.add_term(Rational(1, 2), 2, 1);
    s.add_term(Rational(-1, 2), -2, 0); // cancels the first term
    REQUIRE(s.terms().size() == 1);
    REQUIRE(s.terms()[0].mu_power == 2);
    REQUIRE(s.terms()[0].coeff == Rational(5, 6));

    SECTION("sorted by (mu_power desc, log_power desc)") {
        MuSeries t;
        t.add_term(Rational(1), -1, 0);
        t.add_term(Rational(1), 2, 0);
        t.add_term(Rational(1), 2, 1);
        t.add_term(Rational(1), 0, 1);
        std::vector<std::pair<int, int>> order;
        for (const auto& term : t.terms())
            order.emplace_back(term.mu_power, term.log_power);
        REQUIRE(order == std::vector<std::pair<int, int>>{{2, 1}, {2, 0}, {0, 1}, {-1, 0}});
    }
    SECTION("log powers above 1 rejected") {
        MuSeries t;
        REQUIRE_THROWS_AS(t.add_term(Rational(1), 0, 2), std::domain_error);
    }
}

TEST_CASE("mu_differentiate on the product rule") {
    // d/dmu [1/2 mu^2 log mu] = mu log mu + 1/2 mu
    const MuSeries d = penner::mu_differentiate(MuSeries::term(Rational(1, 2), 2, 1));
    REQUIRE(d.coeff(1, 1) == Rational(1));
    REQUIRE(d.coeff(1, 0) == Rational(1, 2));
    REQUIRE(d.terms().size() == 2);

    // d/dmu [c mu^{1-2k}] = c(1-2k) mu^{-2k}
    for (int k = 1; k <= 5; ++k) {
        const Rational c(3, 7);
        const MuSeries dk = penner::mu_differentiate(MuSeries::term(c, 1 - 2 * k, 0));
        REQUIRE(dk.coeff(-2 * k, 0) == c * Rational(1 - 2 * k));
    }

    // d/dmu [log mu] = mu^{-1}
    const MuSeries dlog = penner::mu_differentiate(MuSeries::term(Rational(1), 0, 1));
    REQUIRE(dlog == MuSeries::term(Rational(1), -1, 0));
}

TEST_CASE("mu_integrate") {
    // int (-1/2 log mu) dmu = -1/2 mu log mu + 1/2 mu
    const MuSeries i = penner::mu_integrate(MuSeries::term(Rational(-1, 2), 0, 1));
    REQUIRE(i.coeff(1, 1) == Rational(-1, 2));
    REQUIRE(i.coeff(1, 0) == Rational(1, 2));

    // int mu^{-1} dmu = log mu
    REQUIRE(penner::mu_integrate(MuSeries::term(Rational(1), -1, 0)) ==
            MuSeries::term(Rational(1), 0, 1));

    // mu^{-1} log mu would need (log mu)^2
    REQUIRE_THROWS_AS(penner::mu_integrate(MuSeries::term(Rational(1), -1, 1)),
                      std::domain_error);
}

TEST_CASE("mu_differentiate after mu_integrate is the identity") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const MuSeries s = random_series(rng, false);
        REQUIRE(penner::mu_differentiate(penner::mu_integrate(s)) == s);
    }
}

TEST_CASE("differentiate then integrate is the identity on pure-power tails") {
    std::mt19937_64 rng(2025);
    for (int i = 0; i < 200; ++i) {
        // powers where differentiation keeps a nonzero pure power (a != 0)
        std::uniform_int_distribution<int> power(-6, 6);
        std::uniform_int_distribution<long long> num(-9, 9);
        MuSeries s;
        for (int j = 0; j < 5; ++j) {
            const int a = power(rng);
            if (a == 0 || a == 1) // a-1 == 0 after differentiation, or log output
                continue;
            s.add_term(Rational(num(rng), 3), a, 0);
        }
        REQUIRE(penner::mu_integrate(penner::mu_differentiate(s)) == s);
    }
}

TEST_CASE("MuSeries linear algebra") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        const MuSeries a = random_series(rng, true), b = random_series(rng, true);
        REQUIRE(a + b == b + a);
        REQUIRE((a - a).is_zero());
        REQUIRE(Rational(2) * (a + b) == Rational(2) * a + Rational(2) * b);
    }
}
