#include <doctest.h>

#include "domino/splitting.hpp"
#include "domino/tilings.hpp"
#include "helpers.hpp"

using namespace domino;
using namespace domino::testing;

TEST_CASE("domino split separates tilings by their rightmost tiles") {
    VariableUniverse u3 = VariableUniverse::board(3);
    SplittingWitness w3 = split_domino(3);
    CHECK(rendered(u3, w3.V.generators()) == std::vector<std::string>{"x1*x3*y3", "y1*y2*y3"});
    CHECK(rendered(u3, w3.U.generators()) == std::vector<std::string>{"x2*x4*y1"});
    CHECK(u3.render(w3.phi_divisor.support) == "x2*x4");
    CHECK(u3.render(w3.psi_divisor.support) == "y3");

    VariableUniverse u4 = VariableUniverse::board(4);
    SplittingWitness w4 = split_domino(4);
    CHECK(rendered(u4, w4.V.generators()) ==
          std::vector<std::string>{"x1*x4*y3*y4", "x2*x5*y1*y4", "y1*y2*y3*y4"});
    CHECK(rendered(u4, w4.U.generators()) == std::vector<std::string>{"x1*x3*x4*x6", "x3*x6*y1*y2"});

    CHECK_THROWS_AS(split_domino(2), std::domain_error);
}

TEST_CASE("domino split generators partition G(I_n)") {
    for (int n = 3; n <= 8; ++n) {
        SplittingWitness w = split_domino(n);
        CHECK(w.V.num_generators() + w.U.num_generators() == domino_ideal(n).num_generators());
        for (const auto& v : w.V.generators())
            for (const auto& u : w.U.generators()) CHECK(v.support != u.support);
    }
}

TEST_CASE("intersection split at n=4") {
    VariableUniverse u4 = VariableUniverse::board(4);
    SplittingWitness hat = split_intersection(4);
    MonomialIdeal W = intersect(split_domino(4).V, split_domino(4).U);

    // every generator of V_4 ∩ U_4 carries y4, x3 and x6
    VarMask forced = mono(u4, "x3*x6*y4").support;
    for (const auto& g : W.generators()) CHECK((g.support & forced) == forced);

    // the hat pieces partition G(W)
    CHECK(hat.V.num_generators() + hat.U.num_generators() == W.num_generators());

    // V-hat is the n=2 pattern times x3*x6*y3*y4
    CHECK(rendered(u4, hat.V.generators()) ==
          std::vector<std::string>{"x1*x3*x4*x6*y3*y4", "x3*x6*y1*y2*y3*y4"});

    CHECK_THROWS_AS(split_intersection(3), std::domain_error);
}

TEST_CASE("intersection split partitions G(V_n ∩ U_n) for n up to 7") {
    for (int n = 4; n <= 7; ++n) {
        SplittingWitness outer = split_domino(n);
        MonomialIdeal W = intersect(outer.V, outer.U);
        SplittingWitness hat = split_intersection(n);
        CHECK(hat.V.num_generators() + hat.U.num_generators() == W.num_generators());
    }
}

TEST_CASE("both splittings verify S1 and S2 exhaustively in the desk range") {
    for (int n = 3; n <= 6; ++n) {
        SplittingReport r = verify_splitting(split_domino(n));
        CHECK(r.structural_ok);
        CHECK(r.s1_ok);
        CHECK(r.s2_ok);
        CHECK(r.passed());
    }
    for (int n = 4; n <= 6; ++n) CHECK(verify_splitting(split_intersection(n)).passed());
}

TEST_CASE("a witness with overlapping divisors fails S1") {
    VariableUniverse u = VariableUniverse::generic(3);  // v1=x, v2,v3=y's
    MonomialIdeal V(3, {mono(u, "v1*v2")});
    MonomialIdeal U(3, {mono(u, "v1*v3")});
    SquarefreeMonomial x1 = mono(u, "v1");
    SplittingReport r = verify_splitting({V, U, x1, x1});
    CHECK(r.structural_ok);
    CHECK_FALSE(r.s1_ok);
    CHECK_FALSE(r.passed());
    REQUIRE(r.counterexample_subset.has_value());
}

TEST_CASE("structural error fires when a divisor misses the intersection generator") {
    VariableUniverse u = VariableUniverse::generic(4);
    MonomialIdeal V(4, {mono(u, "v1")});
    MonomialIdeal U(4, {mono(u, "v2")});
    // G(V ∩ U) = { v1*v2 }; v3 divides no generator
    SplittingReport r = verify_splitting({V, U, mono(u, "v3"), mono(u, "v2")});
    CHECK_FALSE(r.structural_ok);
    CHECK_FALSE(r.passed());
    CHECK(!r.failure.empty());
}

TEST_CASE("non-minimal joint generating set is rejected as structural") {
    VariableUniverse u = VariableUniverse::generic(3);
    MonomialIdeal V(3, {mono(u, "v1")});
    MonomialIdeal U(3, {mono(u, "v1*v2")});  // divisible by the generator of V
    SplittingReport r = verify_splitting({V, U, mono(u, "v1"), mono(u, "v2")});
    CHECK_FALSE(r.structural_ok);
}

TEST_CASE("sampled S2 verification agrees with the exhaustive run") {
    SplittingWitness w = split_domino(5);
    SplittingVerifyOptions sampled;
    sampled.s2_samples = 500;
    SplittingReport r = verify_splitting(w, sampled);
    CHECK(r.passed());
    CHECK_FALSE(r.s2_exhaustive);
    CHECK(verify_splitting(w).s2_exhaustive);

    // and it still catches the S1 counterexample regardless of mode
    VariableUniverse u = VariableUniverse::generic(3);
    MonomialIdeal V(3, {mono(u, "v1*v2")});
    MonomialIdeal U(3, {mono(u, "v1*v3")});
    SplittingReport bad = verify_splitting({V, U, mono(u, "v1"), mono(u, "v1")}, sampled);
    CHECK_FALSE(bad.passed());
}
