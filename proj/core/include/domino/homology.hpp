#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "domino/simplicial.hpp"

namespace domino {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
    int characteristic = 0;

    static FieldSpec rationals() { return {0}; }
    static FieldSpec prime(int p);
    // "Q", "F2", "F3", ... ; rejects non-prime characteristics
    static FieldSpec parse(const std::string& s);

    bool is_rationals() const { return characteristic == 0; }
    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
    auto operator<=>(const FieldSpec&) const = default;
};

// One reduced homology group over Z.
struct HomologyGroup {
    int degree = 0;
    long long free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

// The augmented chain complex of a simplicial complex.  Level k holds the
// k-vertex faces (dimension k-1); level 0 is the empty face.  The VOID
// complex yields a complex with no levels.
class ChainComplex {
public:
    struct Entry {
        int row;
        int value;  // ±1
    };

    static ChainComplex from_complex(const SimplicialComplex& c);

    int top_level() const { return static_cast<int>(levels_.size()) - 1; }
    bool empty() const { return levels_.empty(); }
    const std::vector<VarMask>& faces(int level) const { return levels_.at(level); }
    long long total_faces() const;

    // ∂_k as sparse columns mapping level k to level k-1 (k >= 1); level 0
    // has the zero boundary
    std::vector<std::vector<Entry>> boundary(int level) const;

    // checks ∂_{k-1} ∘ ∂_k = 0 for every level
    bool square_is_zero() const;

private:
    std::vector<std::vector<VarMask>> levels_;
};

// Full face lattice with verified ∂∂ = 0.
ChainComplex boundary_matrices(const SimplicialComplex& c);

struct SmithNormalForm {
    std::vector<BigInt> invariant_factors;  // nonzero factors, divisibility chain
    int rank = 0;                           // = invariant_factors.size()
};

// SNF over exact unbounded integers; input rows may be ragged-checked dense.
SmithNormalForm smith_normal_form(const std::vector<std::vector<BigInt>>& m);
SmithNormalForm smith_normal_form(const std::vector<std::vector<long long>>& m);

// H̃_d(c; Z) for every degree d in [-1, dim c].  VOID gives the empty map;
// IRRELEVANT gives H̃_{-1} = Z.
std::map<int, HomologyGroup> reduced_homology_Z(const SimplicialComplex& c);

// dim_f H̃_d(c; f) for every degree in [-1, dim c].  Ranks over F_p use
// exact modular elimination, over Q exact fraction-free elimination.
std::map<int, long long> reduced_homology_field(const SimplicialComplex& c, FieldSpec f);

namespace detail {

// Shared elimination core: unimodular integer row operations peel off unit
// pivots until none remain; every field-specific question is then answered
// on the small dense remainder.
class BoundaryReduction {
public:
    BoundaryReduction(const std::vector<std::vector<ChainComplex::Entry>>& columns, int nrows);
    // dense input, used by smith_normal_form
    explicit BoundaryReduction(const std::vector<std::vector<BigInt>>& m);

    long long rank(FieldSpec f) const;
    std::vector<BigInt> invariant_factors() const;

private:
    void run_int64(std::vector<std::vector<std::pair<int, long long>>> rows, int ncols);
    void run_big(std::vector<std::vector<std::pair<int, BigInt>>> rows, int ncols);

    long long unit_pivots_ = 0;
    std::vector<std::vector<BigInt>> remainder_;
};

long long bareiss_rank(std::vector<std::vector<BigInt>> m);
long long modular_rank(const std::vector<std::vector<BigInt>>& m, int p);

}  // namespace detail

}  // namespace domino
