#include <doctest.h>

#include <algorithm>
#include <random>

#include "domino/tilings.hpp"
#include "helpers.hpp"

using namespace domino;
using namespace domino::testing;

namespace {
const VariableUniverse u3 = VariableUniverse::board(3);
}

TEST_CASE("divisibility is support inclusion") {
    CHECK(divides(mono(u3, "y1"), mono(u3, "y1*y2*y3")));
    CHECK(divides(mono(u3, "x1*x3*y3"), mono(u3, "x1*x3*y3")));
    CHECK_FALSE(divides(mono(u3, "x2*x4*y1"), mono(u3, "x1*x3*y3")));
    SquarefreeMonomial other{5, 1};
    CHECK_THROWS_AS(divides(mono(u3, "y1"), other), std::invalid_argument);
}

TEST_CASE("lcm is support union") {
    CHECK(lcm(mono(u3, "x1*x3*y3"), mono(u3, "y1*y2*y3")) == mono(u3, "x1*x3*y1*y2*y3"));
    CHECK(lcm(mono(u3, "x1*x3*y3"), mono(u3, "x2*x4*y1")) == mono(u3, "x1*x2*x3*x4*y1*y3"));
    SquarefreeMonomial m = mono(u3, "x2*y2");
    CHECK(lcm(m, m) == m);
}

TEST_CASE("minimalize removes redundant generators and duplicates") {
    auto I = minimalize({mono(u3, "y1"), mono(u3, "y1*y2")});
    CHECK(rendered(u3, I.generators()) == std::vector<std::string>{"y1"});

    auto J = minimalize({mono(u3, "x1*x3*y3"), mono(u3, "x2*x4*y1"), mono(u3, "y1*y2*y3")});
    CHECK(rendered(u3, J.generators()) ==
          std::vector<std::string>{"x1*x3*y3", "x2*x4*y1", "y1*y2*y3"});

    auto K = minimalize({mono(u3, "x1*y1"), mono(u3, "x1*y1")});
    CHECK(K.num_generators() == 1);

    CHECK_THROWS_AS(minimalize({}), std::domain_error);
}

TEST_CASE("minimalize is idempotent and order-independent") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<SquarefreeMonomial> gens;
        int count = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < count; ++i)
            gens.push_back({10, static_cast<VarMask>(rng() % 1024)});
        std::replace_if(
            gens.begin(), gens.end(), [](const SquarefreeMonomial& m) { return m.support == 0; },
            SquarefreeMonomial{10, 1});
        MonomialIdeal first = minimalize(gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(minimalize(gens) == first);
        CHECK(minimalize(first.generators()) == first);
    }
}

TEST_CASE("intersection matches the membership contract") {
    MonomialIdeal V(7, {mono(u3, "x1*x3*y3"), mono(u3, "y1*y2*y3")});
    MonomialIdeal U(7, {mono(u3, "x2*x4*y1")});
    MonomialIdeal W = intersect(V, U);
    CHECK(rendered(u3, W.generators()) ==
          std::vector<std::string>{"x1*x2*x3*x4*y1*y3", "x2*x4*y1*y2*y3"});

    // oracle: exhaustive scan of all squarefree monomials in the universe
    for (VarMask m = 0; m < (VarMask{1} << 7); ++m) {
        SquarefreeMonomial probe{7, m};
        CHECK(W.contains(probe) == (V.contains(probe) && U.contains(probe)));
    }
}

TEST_CASE("intersection membership contract holds on random ideals up to 12 variables") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int nv = 6 + static_cast<int>(rng() % 7);  // 6..12
        auto random_ideal = [&]() {
            std::vector<SquarefreeMonomial> gens;
            int count = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < count; ++i) {
                VarMask m = rng() & ((VarMask{1} << nv) - 1);
                gens.push_back({nv, m ? m : VarMask{1}});
            }
            return minimalize(gens);
        };
        MonomialIdeal I = random_ideal(), J = random_ideal(), W = intersect(I, J);
        for (VarMask m = 0; m < (VarMask{1} << nv); ++m) {
            SquarefreeMonomial probe{nv, m};
            REQUIRE(W.contains(probe) == (I.contains(probe) && J.contains(probe)));
        }
    }
}

TEST_CASE("intersection is idempotent") {
    MonomialIdeal I = domino_ideal(4);
    CHECK(intersect(I, I) == I);
    MonomialIdeal y1(7, {mono(u3, "y1")});
    MonomialIdeal y2(7, {mono(u3, "y2")});
    CHECK(rendered(u3, intersect(y1, y2).generators()) == std::vector<std::string>{"y1*y2"});
}

TEST_CASE("universe mismatch is rejected") {
    MonomialIdeal I = domino_ideal(3);
    MonomialIdeal J = domino_ideal(4);
    CHECK_THROWS_AS(intersect(I, J), std::invalid_argument);
}
