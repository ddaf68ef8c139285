#include "domino/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

namespace domino {

namespace {

// keep maximal faces only, lex order
std::vector<VarMask> maximalize(std::vector<VarMask> faces) {
    std::sort(faces.begin(), faces.end(), [](VarMask a, VarMask b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb;
        return lex_less(a, b);
    });
    std::vector<VarMask> kept;
    for (VarMask f : faces) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [f](VarMask k) { return (f & k) == f; });
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ambient_size, VarMask vertex_universe,
                                     std::vector<VarMask> faces)
    : ambient_size_(ambient_size), universe_(vertex_universe), facets_(maximalize(std::move(faces))) {
    if (ambient_size_ < 0 || ambient_size_ > kMaxUniverse)
        throw std::domain_error("ambient size out of range");
    if (ambient_size_ < kMaxUniverse && (universe_ >> ambient_size_) != 0)
        throw std::invalid_argument("vertex universe exceeds ambient variable range");
    for (VarMask f : facets_)
        if ((f & universe_) != f) throw std::invalid_argument("facet not contained in vertex universe");
}

SimplicialComplex SimplicialComplex::void_complex(int ambient_size) {
    return SimplicialComplex(ambient_size, 0, {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int ambient_size) {
    return SimplicialComplex(ambient_size, 0, {0});
}

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int d = -1;
    for (VarMask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

bool SimplicialComplex::has_face(VarMask f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [f](VarMask g) { return (f & g) == f; });
}

SimplicialComplex facet_complex(const MonomialIdeal& I) {
    std::vector<VarMask> facets;
    VarMask universe = 0;
    for (const auto& g : I.generators()) {
        facets.push_back(g.support);
        universe |= g.support;
    }
    return SimplicialComplex(I.universe_size(), universe, std::move(facets));
}

SimplicialComplex complement_complex(const SimplicialComplex& c, VarMask X) {
    std::vector<VarMask> comps;
    for (VarMask f : c.facets()) {
        if ((f & X) != f) throw std::domain_error("complement_complex: facet not contained in X");
        comps.push_back(X & ~f);
    }
    return SimplicialComplex(c.ambient_size(), X, std::move(comps));
}

SimplicialComplex induced_subcollection(const SimplicialComplex& c, VarMask Y) {
    if ((Y & c.vertex_universe()) != Y)
        throw std::domain_error("induced_subcollection: Y not contained in the vertex universe");
    std::vector<VarMask> kept;
    VarMask universe = 0;
    for (VarMask f : c.facets())
        if ((f & Y) == f) {
            kept.push_back(f);
            universe |= f;
        }
    return SimplicialComplex(c.ambient_size(), universe, std::move(kept));
}

SimplicialComplex link(const SimplicialComplex& c, int vertex) {
    VarMask v = bit(vertex);
    if ((c.vertex_universe() & v) == 0) throw std::domain_error("link: vertex outside the universe");
    std::vector<VarMask> faces;
    for (VarMask f : c.facets())
        if (f & v) faces.push_back(f & ~v);
    return SimplicialComplex(c.ambient_size(), c.vertex_universe() & ~v, std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& c, int vertex) {
    VarMask v = bit(vertex);
    if ((c.vertex_universe() & v) == 0) throw std::domain_error("deletion: vertex outside the universe");
    std::vector<VarMask> faces;
    for (VarMask f : c.facets()) faces.push_back(f & ~v);
    return SimplicialComplex(c.ambient_size(), c.vertex_universe() & ~v, std::move(faces));
}

namespace {

// closure key = set of facets contained in y; 0 when no facet fits
std::uint64_t facet_closure(const std::vector<VarMask>& facets, VarMask y, VarMask* vertex_union) {
    std::uint64_t closure = 0;
    VarMask u = 0;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if ((facets[i] & y) == facets[i]) {
            closure |= std::uint64_t{1} << i;
            u |= facets[i];
        }
    *vertex_union = u;
    return closure;
}

}  // namespace

std::vector<InducedSubcollection> enumerate_induced_subcollections(const SimplicialComplex& c,
                                                                   SubcollectionStrategy strategy) {
    const auto& facets = c.facets();
    int g = static_cast<int>(facets.size());
    if (g < 1) throw std::domain_error("enumerate_induced_subcollections: complex has no facets");
    int nv = popcount(c.vertex_universe());
    if (strategy == SubcollectionStrategy::Auto)
        strategy = g <= nv ? SubcollectionStrategy::FacetSubsets : SubcollectionStrategy::VertexSubsets;
    if (strategy == SubcollectionStrategy::FacetSubsets && g > 30)
        throw std::domain_error("too many facets to enumerate facet subsets");
    if (strategy == SubcollectionStrategy::VertexSubsets && nv > 30)
        throw std::domain_error("too many vertices to enumerate vertex subsets");

    std::vector<InducedSubcollection> out;
    std::unordered_set<std::uint64_t> seen;
    auto consider = [&](VarMask y) {
        VarMask vertex_union = 0;
        std::uint64_t closure = facet_closure(facets, y, &vertex_union);
        if (closure == 0) return;
        if (!seen.insert(closure).second) return;
        InducedSubcollection sub;
        sub.vertex_union = vertex_union;
        sub.vertex_count = popcount(vertex_union);
        for (int i = 0; i < g; ++i)
            if (closure >> i & 1) sub.facet_indices.push_back(i);
        out.push_back(std::move(sub));
    };

    if (strategy == SubcollectionStrategy::FacetSubsets) {
        for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << g); ++subset) {
            VarMask y = 0;
            for (int i = 0; i < g; ++i)
                if (subset >> i & 1) y |= facets[i];
            consider(y);
        }
    } else {
        VarMask universe = c.vertex_universe();
        // iterate all submasks of the vertex universe, descending
        VarMask y = universe;
        while (true) {
            consider(y);
            if (y == 0) break;
            y = (y - 1) & universe;
        }
    }
    // canonical output order regardless of strategy: by facet index set
    std::sort(out.begin(), out.end(), [](const InducedSubcollection& a, const InducedSubcollection& b) {
        return a.facet_indices < b.facet_indices;
    });
    return out;
}

}  // namespace domino
