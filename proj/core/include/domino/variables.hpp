#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domino {

// Vertex/variable subsets are bitmasks over a flat id range [0, universe_size).
using VarMask = std::uint64_t;

constexpr int kMaxUniverse = 64;

inline int popcount(VarMask m) { return __builtin_popcountll(m); }

inline VarMask bit(int id) { return VarMask{1} << id; }

// ids of the set bits, ascending
std::vector<int> mask_ids(VarMask m);

// lexicographic comparison of the sorted id sequences; this is the canonical
// order used for generators, facets, and tilings everywhere
bool lex_less(VarMask a, VarMask b);

enum class VarKind { Horizontal, Vertical };

// A variable of the ring k[x_1..x_{2n-2}, y_1..y_n] for a 2xn board.
// Total order: x_1 < ... < x_{2n-2} < y_1 < ... < y_n, realized by flat ids
// x_k -> k-1 and y_k -> (2n-2)+(k-1).
struct VariableId {
    VarKind kind;
    int index;  // 1-based

    bool operator==(const VariableId&) const = default;
};

// Naming table for a variable universe.  Board universes (size 3n-2) use the
// x/y convention above; generic universes fall back to v1..vk.
class VariableUniverse {
public:
    static VariableUniverse board(int n);
    static VariableUniverse generic(int size);

    int size() const { return size_; }
    int board_width() const { return n_; }  // -1 for generic
    VarMask full_mask() const { return size_ == 64 ? ~VarMask{0} : bit(size_) - 1; }

    int id_of(VariableId v) const;
    VariableId var_of(int id) const;
    std::string name(int id) const;

    // "x1*x3*y3" under the canonical variable order; "1" for the empty mask
    std::string render(VarMask m) const;

private:
    VariableUniverse(int n, int size) : n_(n), size_(size) {}
    int n_;
    int size_;
};

}  // namespace domino
