#include "domino/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace domino {

FieldSpec FieldSpec::prime(int p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field characteristic must be a prime");
    return {p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
        int p = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("cannot parse field spec '" + s + "'");
            p = p * 10 + (s[i] - '0');
            if (p > 1'000'000) throw std::invalid_argument("field characteristic too large");
        }
        return prime(p);
    }
    throw std::invalid_argument("cannot parse field spec '" + s + "' (expected Q or F<p>)");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
}

ChainComplex ChainComplex::from_complex(const SimplicialComplex& c) {
    ChainComplex cc;
    if (c.is_void()) return cc;
    std::unordered_set<VarMask> seen;
    int top = 0;
    for (VarMask f : c.facets()) {
        top = std::max(top, popcount(f));
        VarMask sub = f;
        while (true) {  // all submasks of the facet, including the empty face
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    cc.levels_.assign(top + 1, {});
    for (VarMask f : seen) cc.levels_[popcount(f)].push_back(f);
    for (auto& level : cc.levels_) std::sort(level.begin(), level.end());
    return cc;
}

long long ChainComplex::total_faces() const {
    long long n = 0;
    for (const auto& level : levels_) n += static_cast<long long>(level.size());
    return n;
}

std::vector<std::vector<ChainComplex::Entry>> ChainComplex::boundary(int level) const {
    if (level < 1 || level > top_level()) throw std::domain_error("boundary level out of range");
    const auto& faces = levels_[level];
    const auto& below = levels_[level - 1];
    std::vector<std::vector<Entry>> cols(faces.size());
    for (std::size_t ci = 0; ci < faces.size(); ++ci) {
        VarMask f = faces[ci];
        int sign = 1;
        VarMask rest = f;
        while (rest) {
            VarMask vbit = rest & (~rest + 1);  // lowest set bit, ascending vertex order
            VarMask g = f & ~vbit;
            auto it = std::lower_bound(below.begin(), below.end(), g);
            if (it == below.end() || *it != g) throw std::logic_error("face lattice is not closed");
            cols[ci].push_back({static_cast<int>(it - below.begin()), sign});
            sign = -sign;
            rest &= rest - 1;
        }
    }
    return cols;
}

bool ChainComplex::square_is_zero() const {
    for (int level = 2; level <= top_level(); ++level) {
        auto d1 = boundary(level);
        auto d0 = boundary(level - 1);
        for (const auto& col : d1) {
            std::unordered_map<int, long long> acc;
            for (const Entry& e : col)
                for (const Entry& f : d0[e.row]) acc[f.row] += static_cast<long long>(e.value) * f.value;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

ChainComplex boundary_matrices(const SimplicialComplex& c) {
    ChainComplex cc = ChainComplex::from_complex(c);
    if (!cc.square_is_zero()) throw std::logic_error("boundary composition is nonzero");
    return cc;
}

namespace {

// one BoundaryReduction per level, shared by the Z and field paths
std::vector<detail::BoundaryReduction> reduce_all_levels(const ChainComplex& cc) {
    std::vector<detail::BoundaryReduction> reds;
    for (int level = 1; level <= cc.top_level(); ++level)
        reds.emplace_back(cc.boundary(level), static_cast<int>(cc.faces(level - 1).size()));
    return reds;
}

}  // namespace

std::map<int, HomologyGroup> reduced_homology_Z(const SimplicialComplex& c) {
    std::map<int, HomologyGroup> out;
    ChainComplex cc = ChainComplex::from_complex(c);
    if (cc.empty()) return out;  // VOID: zero chain complex
    auto reds = reduce_all_levels(cc);
    auto rank_at = [&](int level) -> long long {
        if (level < 1 || level > cc.top_level()) return 0;
        return reds[level - 1].rank(FieldSpec::rationals());
    };
    for (int level = 0; level <= cc.top_level(); ++level) {
        HomologyGroup g;
        g.degree = level - 1;
        g.free_rank = static_cast<long long>(cc.faces(level).size()) - rank_at(level) - rank_at(level + 1);
        if (level + 1 <= cc.top_level())
            for (const BigInt& f : reds[level].invariant_factors())
                if (f > 1) g.torsion.push_back(f);
        out[g.degree] = std::move(g);
    }
    return out;
}

std::map<int, long long> reduced_homology_field(const SimplicialComplex& c, FieldSpec f) {
    std::map<int, long long> out;
    ChainComplex cc = ChainComplex::from_complex(c);
    if (cc.empty()) return out;
    auto reds = reduce_all_levels(cc);
    auto rank_at = [&](int level) -> long long {
        if (level < 1 || level > cc.top_level()) return 0;
        return reds[level - 1].rank(f);
    };
    for (int level = 0; level <= cc.top_level(); ++level)
        out[level - 1] =
            static_cast<long long>(cc.faces(level).size()) - rank_at(level) - rank_at(level + 1);
    return out;
}

}  // namespace domino
