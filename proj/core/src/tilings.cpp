#include "domino/tilings.hpp"

#include <algorithm>

namespace domino {

namespace {

int x_id(int n, int k) { return k - 1; }                // 1 <= k <= 2n-2
int y_id(int n, int k) { return (2 * n - 2) + k - 1; }  // 1 <= k <= n

void walk_columns(int n, int col, VarMask acc, std::vector<DominoTiling>& out) {
    if (col > n) {
        out.push_back({n, acc});
        return;
    }
    walk_columns(n, col + 1, acc | bit(y_id(n, col)), out);
    if (col + 1 <= n)
        walk_columns(n, col + 2, acc | bit(x_id(n, col)) | bit(x_id(n, n - 1 + col)), out);
}

}  // namespace

std::vector<DominoTiling> enumerate_tilings(int n) {
    if (n < 1) throw std::domain_error("enumerate_tilings: n must be >= 1");
    VariableUniverse::board(n);  // range check on the universe
    std::vector<DominoTiling> out;
    walk_columns(n, 1, 0, out);
    std::sort(out.begin(), out.end(), [](const DominoTiling& a, const DominoTiling& b) {
        return lex_less(a.dominos, b.dominos);
    });
    return out;
}

SquarefreeMonomial tiling_to_monomial(const DominoTiling& t) {
    return {3 * t.n - 2, t.dominos};
}

MonomialIdeal domino_ideal(int n) {
    std::vector<SquarefreeMonomial> gens;
    for (const DominoTiling& t : enumerate_tilings(n)) gens.push_back(tiling_to_monomial(t));
    // tilings are distinct monomials of equal degree n, so this is already
    // the minimal generating set
    return MonomialIdeal(3 * n - 2, std::move(gens));
}

RightmostPartition partition_rightmost(int n) {
    if (n < 3) throw std::domain_error("partition_rightmost: n must be >= 3");
    RightmostPartition p;
    VarMask a_key = bit(y_id(n, n - 1)) | bit(y_id(n, n));
    VarMask b_key = bit(x_id(n, n - 1)) | bit(x_id(n, 2 * n - 2));
    VarMask c_key = bit(x_id(n, n - 2)) | bit(x_id(n, 2 * n - 3)) | bit(y_id(n, n));
    for (const DominoTiling& t : enumerate_tilings(n)) {
        if ((t.dominos & a_key) == a_key)
            p.A.push_back(t);
        else if ((t.dominos & b_key) == b_key)
            p.B.push_back(t);
        else if ((t.dominos & c_key) == c_key)
            p.C.push_back(t);
        else
            throw std::logic_error("tiling escaped the rightmost partition");
    }
    return p;
}

bool is_valid_tiling(const DominoTiling& t) {
    int n = t.n;
    if (n < 1) return false;
    if (popcount(t.dominos) != n) return false;
    // occupancy grid: row 0 = top, row 1 = bottom
    std::vector<int> cover(2 * n, 0);
    for (int id : mask_ids(t.dominos)) {
        if (id < 2 * n - 2) {
            int k = id + 1;  // x_k
            bool top = k <= n - 1;
            int col = top ? k : k - (n - 1);
            int row = top ? 0 : 1;
            ++cover[row * n + col - 1];
            ++cover[row * n + col];
        } else {
            int k = id - (2 * n - 2) + 1;  // y_k
            ++cover[k - 1];
            ++cover[n + k - 1];
        }
    }
    if (!std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; })) return false;
    // horizontal tiles occur in stacked pairs: x_k forces x_{n-1+k}
    for (int k = 1; k <= n - 1; ++k) {
        bool top = t.dominos >> x_id(n, k) & 1;
        bool bottom = t.dominos >> x_id(n, n - 1 + k) & 1;
        if (top != bottom) return false;
    }
    return true;
}

}  // namespace domino
