#include <doctest.h>

#include "domino/tilings.hpp"
#include "helpers.hpp"

using namespace domino;
using namespace domino::testing;

TEST_CASE("tiling counts follow the two-term recurrence") {
    std::vector<long long> expected = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
    for (int n = 1; n <= 12; ++n)
        CHECK(enumerate_tilings(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("small boards enumerate to the known tilings in canonical order") {
    VariableUniverse u1 = VariableUniverse::board(1);
    auto t1 = enumerate_tilings(1);
    REQUIRE(t1.size() == 1);
    CHECK(u1.render(t1[0].dominos) == "y1");

    VariableUniverse u3 = VariableUniverse::board(3);
    std::vector<std::string> got3;
    for (const auto& t : enumerate_tilings(3)) got3.push_back(u3.render(t.dominos));
    CHECK(got3 == std::vector<std::string>{"x1*x3*y3", "x2*x4*y1", "y1*y2*y3"});

    VariableUniverse u4 = VariableUniverse::board(4);
    std::vector<std::string> got4;
    for (const auto& t : enumerate_tilings(4)) got4.push_back(u4.render(t.dominos));
    CHECK(got4 == std::vector<std::string>{"x1*x3*x4*x6", "x1*x4*y3*y4", "x2*x5*y1*y4",
                                           "x3*x6*y1*y2", "y1*y2*y3*y4"});
}

TEST_CASE("rejects non-positive widths") {
    CHECK_THROWS_AS(enumerate_tilings(0), std::domain_error);
    CHECK_THROWS_AS(enumerate_tilings(-2), std::domain_error);
}

TEST_CASE("every enumerated tiling is a disjoint cover with paired horizontals") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : enumerate_tilings(n)) {
            CHECK(is_valid_tiling(t));
            CHECK(popcount(t.dominos) == n);
        }
}

TEST_CASE("enumeration is deterministic") {
    CHECK(enumerate_tilings(7) == enumerate_tilings(7));
}

TEST_CASE("tiling_to_monomial preserves the support and degree") {
    VariableUniverse u2 = VariableUniverse::board(2);
    auto t2 = enumerate_tilings(2);
    REQUIRE(t2.size() == 2);
    // the horizontal pair in columns 1-2 is x1 (top) with x2 (bottom)
    CHECK(u2.render(tiling_to_monomial(t2[0]).support) == "x1*x2");
    CHECK(u2.render(tiling_to_monomial(t2[1]).support) == "y1*y2");
    for (const auto& t : enumerate_tilings(5)) CHECK(tiling_to_monomial(t).degree() == 5);
}

TEST_CASE("domino ideal holds the tilings as its minimal generators") {
    VariableUniverse u3 = VariableUniverse::board(3);
    CHECK(rendered(u3, domino_ideal(3).generators()) ==
          std::vector<std::string>{"x1*x3*y3", "x2*x4*y1", "y1*y2*y3"});
    CHECK(domino_ideal(4).num_generators() == 5);
    VariableUniverse u1 = VariableUniverse::board(1);
    CHECK(rendered(u1, domino_ideal(1).generators()) == std::vector<std::string>{"y1"});
}

TEST_CASE("rightmost partition splits the known n=3 and n=4 tilings") {
    VariableUniverse u3 = VariableUniverse::board(3);
    RightmostPartition p3 = partition_rightmost(3);
    REQUIRE(p3.A.size() == 1);
    REQUIRE(p3.B.size() == 1);
    REQUIRE(p3.C.size() == 1);
    CHECK(u3.render(p3.A[0].dominos) == "y1*y2*y3");
    CHECK(u3.render(p3.B[0].dominos) == "x2*x4*y1");
    CHECK(u3.render(p3.C[0].dominos) == "x1*x3*y3");

    VariableUniverse u4 = VariableUniverse::board(4);
    RightmostPartition p4 = partition_rightmost(4);
    std::vector<std::string> a4, b4, c4;
    for (const auto& t : p4.A) a4.push_back(u4.render(t.dominos));
    for (const auto& t : p4.B) b4.push_back(u4.render(t.dominos));
    for (const auto& t : p4.C) c4.push_back(u4.render(t.dominos));
    CHECK(a4 == std::vector<std::string>{"x1*x4*y3*y4", "y1*y2*y3*y4"});
    CHECK(b4 == std::vector<std::string>{"x1*x3*x4*x6", "x3*x6*y1*y2"});
    CHECK(c4 == std::vector<std::string>{"x2*x5*y1*y4"});
}

TEST_CASE("rightmost partition is a partition for n up to 10") {
    for (int n = 3; n <= 10; ++n) {
        RightmostPartition p = partition_rightmost(n);
        std::vector<VarMask> all;
        for (const auto& t : p.A) all.push_back(t.dominos);
        for (const auto& t : p.B) all.push_back(t.dominos);
        for (const auto& t : p.C) all.push_back(t.dominos);
        std::sort(all.begin(), all.end());
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        CHECK(all.size() == enumerate_tilings(n).size());
    }
    CHECK_THROWS_AS(partition_rightmost(2), std::domain_error);
}
