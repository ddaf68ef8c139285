#pragma once

#include <vector>

#include "domino/monomial.hpp"
#include "domino/variables.hpp"

namespace domino {

// A domino tiling of the 2xn board, encoded by the variables of its tiles:
// y_k for a vertical tile at column k, x_k (top) and x_{n-1+k} (bottom) for
// the stacked horizontal pair spanning columns k and k+1.
struct DominoTiling {
    int n = 0;
    VarMask dominos = 0;  // exactly n variables

    bool operator==(const DominoTiling&) const = default;
};

// All tilings of the 2xn board, exactly once, lex-ordered on the variable
// sequence.  |T_n| follows the recurrence |T_n| = |T_{n-1}| + |T_{n-2}|
// with |T_1| = 1, |T_2| = 2.
std::vector<DominoTiling> enumerate_tilings(int n);

SquarefreeMonomial tiling_to_monomial(const DominoTiling& t);

// The ideal I_n generated by the tilings of T_n, over k[x_1..x_{2n-2}, y_1..y_n].
MonomialIdeal domino_ideal(int n);

// T_n partitioned by the rightmost tiles: A_n ends in the verticals
// y_{n-1} y_n, B_n ends in the horizontal pair x_{n-1} x_{2n-2}, and C_n ends
// in x_{n-2} x_{2n-3} y_n.  Requires n >= 3.
struct RightmostPartition {
    std::vector<DominoTiling> A, B, C;
};
RightmostPartition partition_rightmost(int n);

// internal consistency of one tiling: degree n, disjoint cover of the board,
// horizontal tiles paired top/bottom
bool is_valid_tiling(const DominoTiling& t);

}  // namespace domino
