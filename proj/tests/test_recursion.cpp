#include <doctest.h>

#include "domino/recursion.hpp"
#include "domino/tilings.hpp"
#include "helpers.hpp"

using namespace domino;
using namespace domino::testing;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("splitting identity holds entrywise for the small boards") {
    for (int n = 3; n <= 5; ++n) {
        IdentityCheckReport r = splitting_identity_check(n, Q);
        CHECK(r.passed());
        CHECK(r.mismatches.empty());
    }
    CHECK(splitting_identity_check(4, FieldSpec::prime(2)).passed());
}

TEST_CASE("at n=3 the corner entry comes entirely from the intersection term") {
    BettiTable w3 = betti_koszul(domino_intersection(3), Q);
    BettiTable i3 = betti_koszul(domino_ideal(3), Q);
    BettiTable i2 = betti_koszul(domino_ideal(2), Q);
    BettiTable i1 = betti_koszul(domino_ideal(1), Q);
    CHECK(i3.at(2, 7) == 1);
    CHECK(w3.at(1, 7) == 1);
    CHECK(i2.at(2, 6) == 0);
    CHECK(i1.at(2, 5) == 0);
}

TEST_CASE("hat-ideal relations hold at n=5") {
    RelationsCheckReport r = relations_check(5, Q);
    CHECK(r.hat_v.empty());
    CHECK(r.hat_u.empty());
    CHECK(r.hat_intersection.empty());
    CHECK(r.passed());
    CHECK_THROWS_AS(relations_check(4, Q), std::domain_error);
}

TEST_CASE("hat-ideal relations hold at n=6 over F3") {
    CHECK(relations_check(6, FieldSpec::prime(3)).passed());
}

TEST_CASE("the V-hat piece at n=5 is the n=3 table shifted four degrees") {
    SplittingWitness hat = split_intersection(5);
    BettiTable vhat = betti_koszul(hat.V, Q);
    BettiTable i3 = betti_koszul(domino_ideal(3), Q).shifted(0, 4);
    CHECK(vhat.same_entries(i3));
}

TEST_CASE("recursion reproduces direct tables under the ideal-indexed base case") {
    for (int n = 4; n <= 5; ++n) {
        BettiTable rec = betti_recursive(n, BaseCaseTable::ideal_indexed());
        BettiTable direct = betti_koszul(domino_ideal(n), Q);
        CHECK(rec.same_entries(direct));
    }
    CHECK(betti_recursive(4, BaseCaseTable::ideal_indexed()).at(3, 10) == 1);
    CHECK_THROWS_AS(betti_recursive(3, BaseCaseTable::ideal_indexed()), std::domain_error);
}

TEST_CASE("the printed base-case reading does not reproduce direct tables") {
    BettiTable rec = betti_recursive(4, BaseCaseTable::printed());
    BettiTable direct = betti_koszul(domino_ideal(4), Q);
    CHECK_FALSE(rec.same_entries(direct));
}

TEST_CASE("reconciliation harness certifies a unique shift") {
    RecursionReconciliation rec = reconcile_recursion(5, Q);
    REQUIRE(rec.unique_shift.has_value());
    CHECK(*rec.unique_shift == -1);
    CHECK(rec.match_by_shift.at(-1));
    CHECK_FALSE(rec.match_by_shift.at(0));
    CHECK(rec.narrative.find("beta_{0,5}") != std::string::npos);
    CHECK(rec.narrative.find("unique") != std::string::npos);
}

TEST_CASE("recursive and direct pd and reg agree") {
    for (int n = 4; n <= 6; ++n) {
        BettiTable rec = betti_recursive(n, BaseCaseTable::ideal_indexed());
        CHECK(projective_dimension(rec) == n - 1);
        CHECK(regularity(rec) == 2 * n - 1);
        CHECK(rec.at(n - 1, 3 * n - 2) == 1);
    }
}
