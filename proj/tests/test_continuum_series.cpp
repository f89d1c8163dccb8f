#include <catch2/catch_amalgamated.hpp>

#include "penner/continuum.hpp"

using penner::MuSeries;
using penner::Rational;
using penner::Sector;

TEST_CASE("penner_continuum") {
    const MuSeries f2 = penner::penner_continuum(2);
    REQUIRE(f2.coeff(2, 1) == Rational(1, 2));
    REQUIRE(f2.coeff(0, 1) == Rational(-1, 12));
    REQUIRE(f2.coeff(-2, 0) == Rational(-1, 240));
    REQUIRE(f2.terms().size() == 3);

    const MuSeries f3 = penner::penner_continuum(3);
    REQUIRE(f3.coeff(-4, 0) == Rational(1, 1008));
    REQUIRE(f3 - f2 == MuSeries::term(Rational(1, 1008), -4, 0));

    REQUIRE_THROWS_AS(penner::penner_continuum(1), std::domain_error);
}

TEST_CASE("nonorientable_continuum") {
    const MuSeries n1 = penner::nonorientable_continuum(1);
    REQUIRE(n1.coeff(1, 1) == Rational(1, 4));
    REQUIRE(n1.coeff(-1, 0) == Rational(-1, 24));
    REQUIRE(n1.terms().size() == 2);

    const MuSeries n2 = penner::nonorientable_continuum(2);
    REQUIRE(n2.coeff(-3, 0) == Rational(7, 720));

    REQUIRE_THROWS_AS(penner::nonorientable_continuum(0), std::domain_error);
}

TEST_CASE("combined_continuum sectors") {
    const auto sy = penner::combined_continuum(Sector::Symplectic, 4, 4);
    const auto orth = penner::combined_continuum(Sector::Orthogonal, 4, 4);

    SECTION("symplectic spot coefficients") {
        REQUIRE(sy.series.coeff(0, 1) == Rational(-1, 24)); // (1/2)(-1/12)
        REQUIRE(sy.series.coeff(1, 1) == Rational(-1, 4));
        REQUIRE(sy.series.coeff(2, 1) == Rational(1, 4));
        REQUIRE(sy.series.coeff(-1, 0) == Rational(1, 24)); // +chi_r tail
    }
    SECTION("difference is twice the non-orientable series, sum is the full one") {
        REQUIRE(orth.series - sy.series ==
                Rational(2) * penner::nonorientable_continuum(4));
        REQUIRE(orth.series + sy.series == penner::penner_continuum(4));
    }
    SECTION("symplectic sector carries the printed-sign discrepancy note") {
        bool found = false;
        for (const auto& note : sy.notes)
            if (note.find("+1/24 log(mu)") != std::string::npos &&
                note.find("negative") != std::string::npos)
                found = true;
        REQUIRE(found);
    }
}

TEST_CASE("density_of_states_series") {
    const MuSeries d = penner::density_of_states_series(2);
    REQUIRE(d.coeff(0, 1) == Rational(-1, 2));
    REQUIRE(d.coeff(-2, 0) == Rational(1, 12));  // (1/2)(2-1)(B_2/1)
    REQUIRE(d.coeff(-4, 0) == Rational(-7, 120)); // (1/2)(8-1)(B_4/2)
    REQUIRE_THROWS_AS(penner::density_of_states_series(0), std::domain_error);
}

TEST_CASE("dF_NO/dmu tail is exactly half the density-of-states tail") {
    const unsigned k_max = 10;
    const MuSeries deriv = penner::mu_differentiate(penner::nonorientable_continuum(k_max));
    const MuSeries density = penner::density_of_states_series(k_max);
    for (unsigned m = 1; m <= k_max; ++m) {
        const int a = -2 * static_cast<int>(m);
        REQUIRE(deriv.coeff(a, 0) == Rational(1, 2) * density.coeff(a, 0));
        REQUIRE(!deriv.coeff(a, 0).is_zero());
    }
}

TEST_CASE("wick_rotate") {
    SECTION("even negative powers flip by (-1)^{a/2}") {
        const auto r =
            penner::wick_rotate(MuSeries::term(Rational(3), -2, 0) +
                                MuSeries::term(Rational(5), -4, 0));
        REQUIRE(r.series.coeff(-2, 0) == Rational(-3));
        REQUIRE(r.series.coeff(-4, 0) == Rational(5));
        REQUIRE(r.notes.empty());
    }
    SECTION("log terms and odd powers pass through with a note") {
        const auto r = penner::wick_rotate(MuSeries::term(Rational(-1, 2), 0, 1) +
                                           MuSeries::term(Rational(1), 3, 0));
        REQUIRE(r.series.coeff(0, 1) == Rational(-1, 2));
        REQUIRE(r.series.coeff(3, 0) == Rational(1));
        REQUIRE(r.notes.size() == 2);
    }
}
