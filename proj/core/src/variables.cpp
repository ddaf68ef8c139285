#include "domino/variables.hpp"

namespace domino {

std::vector<int> mask_ids(VarMask m) {
    std::vector<int> ids;
    ids.reserve(popcount(m));
    while (m) {
        int id = __builtin_ctzll(m);
        ids.push_back(id);
        m &= m - 1;
    }
    return ids;
}

bool lex_less(VarMask a, VarMask b) {
    // walk both masks from the lowest id; the first position where they
    // disagree decides
    while (a && b) {
        int ia = __builtin_ctzll(a);
        int ib = __builtin_ctzll(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;  // proper prefix comes first
}

VariableUniverse VariableUniverse::board(int n) {
    if (n < 1) throw std::domain_error("board width must be >= 1");
    if (3 * n - 2 > kMaxUniverse) throw std::domain_error("board width too large");
    return VariableUniverse(n, 3 * n - 2);
}

VariableUniverse VariableUniverse::generic(int size) {
    if (size < 0 || size > kMaxUniverse) throw std::domain_error("universe size out of range");
    return VariableUniverse(-1, size);
}

int VariableUniverse::id_of(VariableId v) const {
    if (n_ < 0) throw std::logic_error("generic universe has no x/y variables");
    if (v.kind == VarKind::Horizontal) {
        if (v.index < 1 || v.index > 2 * n_ - 2) throw std::domain_error("x index out of range");
        return v.index - 1;
    }
    if (v.index < 1 || v.index > n_) throw std::domain_error("y index out of range");
    return (2 * n_ - 2) + (v.index - 1);
}

VariableId VariableUniverse::var_of(int id) const {
    if (n_ < 0) throw std::logic_error("generic universe has no x/y variables");
    if (id < 0 || id >= size_) throw std::domain_error("variable id out of range");
    if (id < 2 * n_ - 2) return {VarKind::Horizontal, id + 1};
    return {VarKind::Vertical, id - (2 * n_ - 2) + 1};
}

std::string VariableUniverse::name(int id) const {
    if (id < 0 || id >= size_) throw std::domain_error("variable id out of range");
    if (n_ < 0) return "v" + std::to_string(id + 1);
    VariableId v = var_of(id);
    return (v.kind == VarKind::Horizontal ? "x" : "y") + std::to_string(v.index);
}

std::string VariableUniverse::render(VarMask m) const {
    if (m == 0) return "1";
    std::string out;
    for (int id : mask_ids(m)) {
        if (!out.empty()) out += '*';
        out += name(id);
    }
    return out;
}

}  // namespace domino
