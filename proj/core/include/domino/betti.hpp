#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domino/homology.hpp"
#include "domino/monomial.hpp"
#include "domino/simplicial.hpp"

namespace domino {

// Graded Betti numbers of an ideal, under the IDEAL indexing convention:
// β_{0,j} counts the degree-j minimal generators.  Only positive counts are
// stored.  betti_koszul additionally retains the multigraded refinement
// (i, squarefree multidegree) -> count.
struct BettiTable {
    FieldSpec field;
    std::map<std::pair<int, int>, long long> entries;
    std::map<std::pair<int, VarMask>, long long> multigraded;

    void add(int i, int j, long long v);
    long long at(int i, int j) const;

    // entrywise comparison, ignoring field and multigraded detail
    bool same_entries(const BettiTable& other) const { return entries == other.entries; }
    // graded equality including the field tag; multigraded detail is auxiliary
    bool operator==(const BettiTable& other) const {
        return field == other.field && entries == other.entries;
    }

    // all (i,j) shifted by (di, dj)
    BettiTable shifted(int di, int dj) const;
};

struct TableMismatch {
    int i = 0, j = 0;
    long long lhs = 0, rhs = 0;
};

std::vector<TableMismatch> table_diff(const BettiTable& a, const BettiTable& b);

struct BettiOptions {
    // when set, only entries with j <= max_degree are computed; each column
    // of the table depends only on complexes with j vertices, so the
    // truncated table is exact
    std::optional<int> max_degree;
};

// β_{i,d}(I) = Σ_{Γ' induced ⊆ Δ(I), |V(Γ')| = d} dim_f H̃_{i-1}((Γ')^c within V(Γ')).
// Requires a pure squarefree ideal; non-pure inputs belong to betti_koszul.
BettiTable betti_hochster(const MonomialIdeal& I, FieldSpec f, const BettiOptions& options = {});

// Upper-Koszul route: β_{i,a}(I) = dim_f H̃_{i-1}(K^a(I)) for every squarefree
// multidegree a in the variable union of the generators; purity not required.
BettiTable betti_koszul(const MonomialIdeal& I, FieldSpec f, const BettiOptions& options = {});

// pd = max i, reg = max (j - i) over nonzero entries; empty table is an error.
int projective_dimension(const BettiTable& t);
int regularity(const BettiTable& t);

struct TorsionFinding {
    VarMask multidegree = 0;
    int homology_degree = 0;
    std::vector<BigInt> factors;
};

struct CharIndependenceReport {
    BettiTable rational_table;
    std::vector<std::pair<FieldSpec, std::vector<TableMismatch>>> prime_mismatches;
    std::vector<TorsionFinding> torsion;  // from a Z-homology scan of every touched complex

    bool tables_equal() const;
    bool passed() const { return tables_equal() && torsion.empty(); }
};

CharIndependenceReport char_independence(const MonomialIdeal& I, const std::vector<int>& primes);

// Homology-level consequences of the sphere/contractibility claims for
// Γ_n^c, lk(y_{n-1}) and del(y_{n-1}).  Requires n >= 3.
struct SphereClaimReport {
    int n = 0;
    bool complement_is_sphere = false;  // H̃ = Z exactly in degree n-2, torsion-free
    bool link_is_sphere = false;        // H̃ = Z exactly in degree n-3
    bool deletion_acyclic = false;      // H̃ = 0 everywhere
    std::string detail;

    bool passed() const { return complement_is_sphere && link_is_sphere && deletion_acyclic; }
};

SphereClaimReport verify_sphere_claims(int n);

// Γ_n^c: the complement complex of Δ(I_n) within the full variable set.
SimplicialComplex gamma_complement(int n);

}  // namespace domino
