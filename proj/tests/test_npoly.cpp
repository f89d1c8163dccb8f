#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "penner/npoly.hpp"

using penner::NPoly;
using penner::Rational;

namespace {

NPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    const int d = deg(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k)
        c.emplace_back(num(rng), den(rng));
    return NPoly(std::move(c));
}

} // namespace

TEST_CASE("NPoly canonical form") {
    const NPoly p({Rational(1), Rational(0), Rational(0)});
    REQUIRE(p.degree() == 0);
    REQUIRE(NPoly().is_zero());
    REQUIRE(NPoly().degree() == -1);
    REQUIRE(NPoly(Rational(0)).is_zero());
    const NPoly q = NPoly::monomial(3, Rational(1, 2)) - NPoly::monomial(3, Rational(1, 2));
    REQUIRE(q.is_zero());
    REQUIRE(q == NPoly());
}

TEST_CASE("NPoly arithmetic and evaluation commute") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 200; ++i) {
        const NPoly p = random_poly(rng), q = random_poly(rng);
        for (long long n = -5; n <= 5; ++n) {
            REQUIRE((p * q).eval(n) == p.eval(n) * q.eval(n));
            REQUIRE((p + q).eval(n) == p.eval(n) + q.eval(n));
            REQUIRE((p - q).eval(n) == p.eval(n) - q.eval(n));
        }
    }
}

TEST_CASE("NPoly ring axioms on random inputs") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 100; ++i) {
        const NPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE((a + (-a)).is_zero());
    }
}

TEST_CASE("NPoly linear composition") {
    // p(N) = N^2 + 1
    const NPoly p = NPoly::monomial(2, Rational(1)) + NPoly(Rational(1));
    const NPoly at_double = p.compose_linear(2, 0); // 4N^2 + 1
    REQUIRE(at_double.eval(3LL) == p.eval(6LL));
    const NPoly shifted = p.compose_linear(1, -1); // (N-1)^2 + 1
    REQUIRE(shifted.eval(4LL) == p.eval(3LL));

    std::mt19937_64 rng(55);
    for (int i = 0; i < 50; ++i) {
        const NPoly q = random_poly(rng);
        for (long long n = 0; n <= 4; ++n)
            REQUIRE(q.compose_linear(2, -3).eval(n) == q.eval(2 * n - 3));
    }
}

TEST_CASE("NPoly printing") {
    const NPoly p = NPoly::monomial(3, Rational(1, 6)) + NPoly::monomial(1, Rational(-1, 12));
    REQUIRE(p.to_string() == "1/6*N^3 - 1/12*N");
    REQUIRE(NPoly().to_string() == "0");
    REQUIRE(NPoly::monomial(1, Rational(1)).to_string() == "N");
    REQUIRE(NPoly(Rational(-3, 4)).to_string() == "-3/4");
}
