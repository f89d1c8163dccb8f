#include <catch2/catch_amalgamated.hpp>

#include "penner/verify.hpp"

using penner::IdentityId;
using penner::MatrixSize;

TEST_CASE("all series identities hold symbolically at order 16") {
    for (const IdentityId id : {IdentityId::Eq17Split, IdentityId::Eq5VsEq6,
                                IdentityId::Eq5VsEq9, IdentityId::ProductVsEq24,
                                IdentityId::MirrorSum, IdentityId::MirrorDiff}) {
        const auto report = penner::verify_identity(id, MatrixSize::symbolic(), 16);
        INFO("identity " << report.identity);
        REQUIRE(report.matched);
        REQUIRE(report.mismatches.empty());
        REQUIRE(report.order == 16);
        REQUIRE(report.size_param == "sym");
    }
}

TEST_CASE("series identities hold at concrete sizes 1..6, order 16") {
    for (long long n = 1; n <= 6; ++n) {
        for (const IdentityId id : {IdentityId::Eq17Split, IdentityId::Eq5VsEq6,
                                    IdentityId::Eq5VsEq9, IdentityId::ProductVsEq24,
                                    IdentityId::MirrorSum, IdentityId::MirrorDiff}) {
            const auto report = penner::verify_identity(id, MatrixSize::of(n), 16);
            INFO("identity " << report.identity << " at N=" << n);
            REQUIRE(report.matched);
        }
    }
}

TEST_CASE("closed-form orientation check") {
    for (long long n : {2LL, 3LL}) {
        const auto report =
            penner::verify_identity(IdentityId::ClosedFormOrientation, MatrixSize::of(n), 12);
        INFO("N=" << n);
        REQUIRE(report.matched); // exactly one orientation matches
        REQUIRE(report.mismatches.empty());
        bool names_reciprocal = false, quantifies_gap = false;
        for (const auto& note : report.notes) {
            if (note.find("'reciprocal'") != std::string::npos &&
                note.find("matches") != std::string::npos)
                names_reciprocal = true;
            if (note.find("confirmed exactly") != std::string::npos)
                quantifies_gap = true;
        }
        REQUIRE(names_reciprocal);
        REQUIRE(quantifies_gap);
    }

    SECTION("symbolic size is a domain error") {
        REQUIRE_THROWS_AS(penner::verify_identity(IdentityId::ClosedFormOrientation,
                                                  MatrixSize::symbolic(), 8),
                          std::domain_error);
    }
}

TEST_CASE("identity names round trip") {
    for (const IdentityId id : {IdentityId::Eq17Split, IdentityId::Eq5VsEq6,
                                IdentityId::Eq5VsEq9, IdentityId::ProductVsEq24,
                                IdentityId::MirrorSum, IdentityId::MirrorDiff,
                                IdentityId::ClosedFormOrientation}) {
        const auto round = penner::identity_from_string(penner::to_string(id));
        REQUIRE(round.has_value());
        REQUIRE(*round == id);
    }
    REQUIRE(!penner::identity_from_string("nope").has_value());
}

TEST_CASE("verify_identity validates the order") {
    REQUIRE_THROWS_AS(penner::verify_identity(IdentityId::Eq5VsEq6, MatrixSize::symbolic(), 0),
                      std::invalid_argument);
}
