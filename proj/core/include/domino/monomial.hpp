#pragma once

#include <vector>

#include "domino/variables.hpp"

namespace domino {

// A squarefree monomial over a fixed variable universe, identified with its
// support set.
struct SquarefreeMonomial {
    int universe_size = 0;
    VarMask support = 0;

    int degree() const { return popcount(support); }
    bool operator==(const SquarefreeMonomial&) const = default;
};

bool divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b);
SquarefreeMonomial lcm(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

// A squarefree monomial ideal held by its minimal generating set G(I),
// in canonical (lex) order.
class MonomialIdeal {
public:
    MonomialIdeal(int universe_size, std::vector<SquarefreeMonomial> minimal_gens);

    int universe_size() const { return universe_size_; }
    const std::vector<SquarefreeMonomial>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }

    bool contains(const SquarefreeMonomial& m) const;  // some generator divides m
    bool is_pure() const;                              // all generators of equal degree

    bool operator==(const MonomialIdeal&) const = default;

private:
    int universe_size_;
    std::vector<SquarefreeMonomial> gens_;
};

// Removes divisibility-redundant elements and duplicates, returning the
// minimal generating set of the ideal the input generates.
MonomialIdeal minimalize(const std::vector<SquarefreeMonomial>& gens);

// I ∩ J via pairwise lcms of generators, minimalized.  Membership contract:
// m ∈ result iff some generator of I divides m and some generator of J does.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace domino
