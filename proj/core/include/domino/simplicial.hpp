#pragma once

#include <vector>

#include "domino/monomial.hpp"
#include "domino/variables.hpp"

namespace domino {

// A simplicial complex as a list of facets (maximal faces) over a vertex
// universe.  Two degenerate complexes are distinguished:
//   VOID       — no faces at all (empty facet list)
//   IRRELEVANT — only the empty face, facet list {∅}
// The distinction matters for reduced homology: H̃_{-1}(VOID) = 0 while
// H̃_{-1}(⟨∅⟩) has rank 1.
class SimplicialComplex {
public:
    // facets are maximalized and lex-sorted; universe must contain them
    SimplicialComplex(int ambient_size, VarMask vertex_universe, std::vector<VarMask> faces);

    static SimplicialComplex void_complex(int ambient_size);
    static SimplicialComplex irrelevant_complex(int ambient_size);

    int ambient_size() const { return ambient_size_; }
    VarMask vertex_universe() const { return universe_; }
    const std::vector<VarMask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    int dimension() const;  // -2 for VOID, -1 for IRRELEVANT

    bool has_face(VarMask f) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int ambient_size_;
    VarMask universe_;
    std::vector<VarMask> facets_;
};

// Δ(I): facets are the supports of the minimal generators.
SimplicialComplex facet_complex(const MonomialIdeal& I);

// ⟨X \ F : F facet⟩ within the vertex set X; every facet must lie in X.
SimplicialComplex complement_complex(const SimplicialComplex& c, VarMask X);

// Facets of c contained in Y; the result's vertex universe is the union of
// the retained facets (VOID when none fits).
SimplicialComplex induced_subcollection(const SimplicialComplex& c, VarMask Y);

SimplicialComplex link(const SimplicialComplex& c, int vertex);
SimplicialComplex deletion(const SimplicialComplex& c, int vertex);

// One entry per distinct nonvoid induced subcollection of c, keyed by its
// facet set.
struct InducedSubcollection {
    std::vector<int> facet_indices;  // into c.facets()
    VarMask vertex_union = 0;
    int vertex_count = 0;
};

// The two equivalent enumeration strategies; Auto picks the cheaper of
// 2^#facets and 2^#vertices.
enum class SubcollectionStrategy { Auto, FacetSubsets, VertexSubsets };

std::vector<InducedSubcollection> enumerate_induced_subcollections(
    const SimplicialComplex& c, SubcollectionStrategy strategy = SubcollectionStrategy::Auto);

}  // namespace domino
