#pragma once

#include <optional>

#include "domino/betti.hpp"
#include "domino/splitting.hpp"

namespace domino {

// The V_3 ∩ U_3 base case consumed by the closed Betti recursion.  The
// printed values are β_{1,5} = β_{1,6} = β_{2,7} = 1; direct computation
// under IDEAL indexing instead yields β_{0,5} = β_{0,6} = β_{1,7} = 1, one
// homological step lower.  The discrepancy is handled by an explicit shift
// s ∈ {0, -1} applied to the homological index when the table is consumed;
// the reconciliation harness decides which reading reproduces direct
// computation rather than guessing.
struct BaseCaseTable {
    int shift = 0;

    // effective β_{i,j} of V_3 ∩ U_3 under the configured shift
    long long lookup(int i, int j) const;

    static BaseCaseTable printed() { return {0}; }
    static BaseCaseTable ideal_indexed() { return {-1}; }
};

// The closed recursion for β_{i,j}(I_n): the Betti splitting of I_n plus the
// unrolled splittings of the intersection ideals down to V_3 ∩ U_3.
// Anchored at the tables of I_1, I_2, I_3; requires n >= 4.
BettiTable betti_recursive(int n, const BaseCaseTable& base);

// Entrywise check of β_{i,j}(I_n) = β_{i,j-1}(I_{n-1}) + β_{i,j-2}(I_{n-2})
//                                   + β_{i-1,j}(V_n ∩ U_n)
// with every table computed directly by betti_koszul.  Allows n >= 3.
struct IdentityCheckReport {
    int n = 0;
    FieldSpec field;
    std::vector<TableMismatch> mismatches;
    bool passed() const { return mismatches.empty(); }
};

IdentityCheckReport splitting_identity_check(int n, FieldSpec f);

// Entrywise checks of the three hat-ideal relations, n >= 5:
//   (1) β(V̂_n) = β(I_{n-2}) shifted by +4 in degree
//   (2) β(Û_n) = β(V_{n-1} ∩ U_{n-1}) shifted by +2
//   (3) β(V̂_n ∩ Û_n) = β(V_{n-1} ∩ U_{n-1}) shifted by +3
struct RelationsCheckReport {
    int n = 0;
    FieldSpec field;
    std::vector<TableMismatch> hat_v, hat_u, hat_intersection;
    bool passed() const { return hat_v.empty() && hat_u.empty() && hat_intersection.empty(); }
};

RelationsCheckReport relations_check(int n, FieldSpec f);

// Runs betti_recursive under both shift readings against direct computation
// for every n in [4, max_n] and reports which (if any) reading reconciles.
struct RecursionReconciliation {
    std::map<int, bool> match_by_shift;  // shift -> matched all n
    std::optional<int> unique_shift;
    std::string narrative;  // written report of the base-case indexing finding

    bool passed() const { return unique_shift.has_value(); }
};

RecursionReconciliation reconcile_recursion(int max_n, FieldSpec f);

// V_n ∩ U_n computed from the domino splitting; n >= 3.
MonomialIdeal domino_intersection(int n);

}  // namespace domino
