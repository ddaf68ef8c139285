#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "domino/betti.hpp"
#include "domino/monomial.hpp"
#include "domino/variables.hpp"

namespace domino::testing {

// "x1*x3*y3" -> monomial in the board-n universe; "v2*v5" for generic ones
inline SquarefreeMonomial mono(const VariableUniverse& u, const std::string& text) {
    VarMask m = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok == "1" || tok.empty()) continue;
        int index = std::stoi(tok.substr(1));
        if (tok[0] == 'v')
            m |= bit(index - 1);
        else
            m |= bit(u.id_of({tok[0] == 'x' ? VarKind::Horizontal : VarKind::Vertical, index}));
    }
    return {u.size(), m};
}

inline std::vector<std::string> rendered(const VariableUniverse& u,
                                         const std::vector<SquarefreeMonomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(u.render(m.support));
    return out;
}

inline std::vector<std::string> rendered_facets(const VariableUniverse& u,
                                                const SimplicialComplex& c) {
    std::vector<std::string> out;
    for (VarMask f : c.facets()) out.push_back(u.render(f));
    return out;
}

// Independent oracle: when every face of the Taylor complex has a multidegree
// strictly larger than all of its subsets, the Taylor resolution is minimal
// and beta_{i,j} counts the (i+1)-subsets whose lcm has degree j.  Throws if
// the minimality hypothesis fails, so a wrong use cannot silently pass.
inline BettiTable taylor_minimal_table(const std::vector<SquarefreeMonomial>& gens) {
    int g = static_cast<int>(gens.size());
    if (g > 20) throw std::domain_error("taylor oracle: too many generators");
    std::vector<VarMask> lcms(std::size_t{1} << g, 0);
    BettiTable t;
    t.field = FieldSpec::rationals();
    for (std::uint64_t s = 1; s < lcms.size(); ++s) {
        VarMask l = 0;
        for (int i = 0; i < g; ++i)
            if (s >> i & 1) l |= gens[i].support;
        lcms[s] = l;
        for (int i = 0; i < g; ++i)
            if (s >> i & 1) {
                std::uint64_t smaller = s & ~(std::uint64_t{1} << i);
                if (smaller && lcms[smaller] == l)
                    throw std::domain_error("taylor oracle: resolution is not minimal here");
            }
        t.add(popcount(static_cast<VarMask>(s)) - 1, popcount(l), 1);
    }
    return t;
}

// the minimal 6-vertex triangulation of the real projective plane
inline std::vector<VarMask> rp2_facets() {
    const int triangles[10][3] = {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6},
                                  {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6}};
    std::vector<VarMask> out;
    for (const auto& tr : triangles) out.push_back(bit(tr[0] - 1) | bit(tr[1] - 1) | bit(tr[2] - 1));
    return out;
}

// its Stanley-Reisner ideal: the minimal non-faces, found by brute force
inline MonomialIdeal rp2_stanley_reisner_ideal() {
    std::vector<VarMask> facets = rp2_facets();
    std::vector<char> is_face(64, 0);
    for (VarMask f : facets) {
        VarMask s = f;
        while (true) {
            is_face[s] = 1;
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::vector<SquarefreeMonomial> nonfaces;
    for (VarMask m = 1; m < 64; ++m)
        if (!is_face[m]) nonfaces.push_back({6, m});
    return minimalize(nonfaces);
}

}  // namespace domino::testing
