#include "domino/monomial.hpp"

#include <algorithm>

namespace domino {

namespace {

void require_same_universe(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    if (a.universe_size != b.universe_size)
        throw std::invalid_argument("monomials live in different variable universes");
}

}  // namespace

bool divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    require_same_universe(a, b);
    return (a.support & b.support) == a.support;
}

SquarefreeMonomial lcm(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    require_same_universe(a, b);
    return {a.universe_size, a.support | b.support};
}

MonomialIdeal::MonomialIdeal(int universe_size, std::vector<SquarefreeMonomial> minimal_gens)
    : universe_size_(universe_size), gens_(std::move(minimal_gens)) {
    if (universe_size_ < 0 || universe_size_ > kMaxUniverse)
        throw std::domain_error("universe size out of range");
    for (const auto& g : gens_) {
        if (g.universe_size != universe_size_)
            throw std::invalid_argument("generator universe mismatch");
        if (universe_size_ < kMaxUniverse && (g.support >> universe_size_) != 0)
            throw std::invalid_argument("generator support exceeds universe");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (i != j && divides(gens_[i], gens_[j]))
                throw std::invalid_argument("generating set is not minimal");
    std::sort(gens_.begin(), gens_.end(), [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
        return lex_less(a.support, b.support);
    });
}

bool MonomialIdeal::contains(const SquarefreeMonomial& m) const {
    if (m.universe_size != universe_size_)
        throw std::invalid_argument("monomial universe mismatch");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const SquarefreeMonomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_pure() const {
    if (gens_.empty()) return true;
    int d = gens_.front().degree();
    return std::all_of(gens_.begin(), gens_.end(),
                       [d](const SquarefreeMonomial& g) { return g.degree() == d; });
}

MonomialIdeal minimalize(const std::vector<SquarefreeMonomial>& gens) {
    if (gens.empty()) throw std::domain_error("cannot minimalize an empty generating set");
    int universe = gens.front().universe_size;
    std::vector<SquarefreeMonomial> sorted = gens;
    for (const auto& g : sorted)
        if (g.universe_size != universe)
            throw std::invalid_argument("generators live in different universes");
    // lower degrees first so survivors never divide each other
    std::sort(sorted.begin(), sorted.end(), [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return lex_less(a.support, b.support);
    });
    std::vector<SquarefreeMonomial> kept;
    for (const auto& g : sorted) {
        // equal monomials divide each other, so this also deduplicates
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const SquarefreeMonomial& k) {
            return divides(k, g);
        });
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(universe, std::move(kept));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.universe_size() != J.universe_size())
        throw std::invalid_argument("ideal universe mismatch");
    std::vector<SquarefreeMonomial> pairwise;
    pairwise.reserve(I.num_generators() * J.num_generators());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) pairwise.push_back(lcm(a, b));
    return minimalize(pairwise);
}

}  // namespace domino
