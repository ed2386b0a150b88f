#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "omnisig/lattice.hpp"

using namespace omnisig;

TEST_CASE("containment is divisibility of sigma - 1") {
    CHECK(contains_genus(Genus(3), Genus(5)));
    CHECK_FALSE(contains_genus(Genus(3), Genus(4)));
    for (std::int64_t s = 2; s <= 20; ++s) CHECK(contains_genus(Genus(s), Genus(s)));
}

TEST_CASE("meet and join formulas") {
    CHECK(meet_genus(Genus(7), Genus(9)).value() == 3);
    CHECK(meet_genus(Genus(5), Genus(9)).value() == 5);
    for (std::int64_t n = 2; n <= 30; ++n)
        CHECK(meet_genus(Genus(n), Genus(n + 1)).value() == 2);
    CHECK(join_genus(Genus(3), Genus(4)).value() == 7);
    for (std::int64_t s = 2; s <= 30; ++s) {
        CHECK(join_genus(Genus(s), Genus(s)).value() == s);
        CHECK(join_genus(Genus(2), Genus(s)).value() == s); // P_2 is the bottom
        CHECK(meet_genus(Genus(2), Genus(s)).value() == 2);
    }
}

TEST_CASE("genus operations satisfy the lattice axioms") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(2, 600);
    for (int trial = 0; trial < 10000; ++trial) {
        const Genus a(dist(rng)), b(dist(rng)), c(dist(rng));
        // partial order
        CHECK(contains_genus(a, a));
        if (contains_genus(a, b) && contains_genus(b, a)) CHECK(a == b);
        if (contains_genus(a, b) && contains_genus(b, c)) CHECK(contains_genus(a, c));
        // commutativity
        CHECK(meet_genus(a, b) == meet_genus(b, a));
        CHECK(join_genus(a, b) == join_genus(b, a));
        // associativity
        CHECK(meet_genus(meet_genus(a, b), c) == meet_genus(a, meet_genus(b, c)));
        CHECK(join_genus(join_genus(a, b), c) == join_genus(a, join_genus(b, c)));
        // absorption
        CHECK(meet_genus(a, join_genus(a, b)) == a);
        CHECK(join_genus(a, meet_genus(a, b)) == a);
        // compatibility with the order
        CHECK(contains_genus(meet_genus(a, b), a));
        CHECK(contains_genus(a, join_genus(a, b)));
    }
}

TEST_CASE("non-containment witness (0; 2, 2s+1, 4s+2)") {
    CHECK(witness_non_containment(Genus(2)) == Signature(0, {2, 5, 10}));
    CHECK(witness_non_containment(Genus(4)) == Signature(0, {2, 9, 18}));
    CHECK_FALSE(is_potential(witness_non_containment(Genus(4)), Genus(5)));
    CHECK(witness_non_containment(Genus(3)) == Signature(0, {2, 7, 14}));
    CHECK(is_potential(witness_non_containment(Genus(3)), Genus(3)));
    for (std::int64_t s = 2; s <= 25; ++s) {
        CAPTURE(s);
        CHECK(is_potential(witness_non_containment(Genus(s)), Genus(s)));
        for (std::int64_t t = 2; t <= 25; ++t)
            if ((t - 1) % (s - 1) != 0) {
                CAPTURE(t);
                CHECK_FALSE(is_potential(witness_non_containment(Genus(s)), Genus(t)));
            }
    }
}

TEST_CASE("empirical lattice verification up to genus 9") {
    const auto reports = verify_lattice(9);
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) {
        CAPTURE(to_string(r.claim), r.sigma, r.sigma_prime);
        CHECK(r.matches);
        CHECK(r.counterexamples.empty());
        CHECK(r.matches == r.counterexamples.empty());
    }
    // consecutive pairs get flagged as the P_2 collapse
    bool saw_consecutive = false;
    for (const auto& r : reports)
        if (r.claim == LatticeClaim::consecutive_intersection) {
            saw_consecutive = true;
            CHECK(r.predicted_genus == 2);
        }
    CHECK(saw_consecutive);
}

TEST_CASE("verification guard refuses oversized sweeps") {
    CHECK_THROWS_MATCHES(verify_lattice(50), std::invalid_argument,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("guard 40")));
    CHECK_THROWS_AS(verify_lattice(1), std::invalid_argument);
}

TEST_CASE("lattice report JSON") {
    const auto reports = verify_lattice(3);
    const auto j = to_json(reports.front());
    CHECK(j.contains("claim"));
    CHECK(j["matches"].is_boolean());
    CHECK(j["counterexamples"].is_array());
}
