#include "domino/betti.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "domino/tilings.hpp"

namespace domino {

void BettiTable::add(int i, int j, long long v) {
    if (v == 0) return;
    auto key = std::make_pair(i, j);
    auto it = entries.find(key);
    if (it == entries.end())
        entries.emplace(key, v);
    else if ((it->second += v) == 0)
        entries.erase(it);
}

long long BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

BettiTable BettiTable::shifted(int di, int dj) const {
    BettiTable out;
    out.field = field;
    for (const auto& [key, v] : entries) out.entries[{key.first + di, key.second + dj}] = v;
    for (const auto& [key, v] : multigraded) out.multigraded[{key.first + di, key.second}] = v;
    return out;
}

std::vector<TableMismatch> table_diff(const BettiTable& a, const BettiTable& b) {
    std::vector<TableMismatch> out;
    std::map<std::pair<int, int>, char> keys;
    for (const auto& [k, v] : a.entries) keys[k] = 1;
    for (const auto& [k, v] : b.entries) keys[k] = 1;
    for (const auto& kv : keys) {
        long long lhs = a.at(kv.first.first, kv.first.second);
        long long rhs = b.at(kv.first.first, kv.first.second);
        if (lhs != rhs) out.push_back({kv.first.first, kv.first.second, lhs, rhs});
    }
    return out;
}

BettiTable betti_hochster(const MonomialIdeal& I, FieldSpec f, const BettiOptions& options) {
    if (!I.is_pure())
        throw std::domain_error(
            "betti_hochster requires a pure squarefree ideal; use betti_koszul for mixed degrees");
    BettiTable table;
    table.field = f;
    SimplicialComplex delta = facet_complex(I);
    for (const InducedSubcollection& sub : enumerate_induced_subcollections(delta)) {
        if (options.max_degree && sub.vertex_count > *options.max_degree) continue;
        std::vector<VarMask> facets;
        facets.reserve(sub.facet_indices.size());
        for (int idx : sub.facet_indices) facets.push_back(delta.facets()[idx]);
        SimplicialComplex gamma(delta.ambient_size(), sub.vertex_union, std::move(facets));
        SimplicialComplex comp = complement_complex(gamma, sub.vertex_union);
        for (const auto& [degree, dim] : reduced_homology_field(comp, f))
            table.add(degree + 1, sub.vertex_count, dim);
    }
    return table;
}

namespace {

// visit every multidegree a (subset of the generator-support union) whose
// upper-Koszul complex K^a(I) is nonvoid, i.e. some generator divides a
template <typename Fn>
void for_each_koszul_complex(const MonomialIdeal& I, Fn&& fn) {
    VarMask universe = 0;
    for (const auto& g : I.generators()) universe |= g.support;
    VarMask a = universe;
    while (true) {
        std::vector<VarMask> facets;
        for (const auto& g : I.generators())
            if ((g.support & a) == g.support) facets.push_back(a & ~g.support);
        if (!facets.empty()) {
            SimplicialComplex k(I.universe_size(), a, std::move(facets));
            fn(a, k);
        }
        if (a == 0) break;
        a = (a - 1) & universe;
    }
}

}  // namespace

BettiTable betti_koszul(const MonomialIdeal& I, FieldSpec f, const BettiOptions& options) {
    BettiTable table;
    table.field = f;
    for_each_koszul_complex(I, [&](VarMask a, const SimplicialComplex& k) {
        if (options.max_degree && popcount(a) > *options.max_degree) return;
        for (const auto& [degree, dim] : reduced_homology_field(k, f)) {
            if (dim == 0) continue;
            table.add(degree + 1, popcount(a), dim);
            table.multigraded[{degree + 1, a}] += dim;
        }
    });
    return table;
}

int projective_dimension(const BettiTable& t) {
    if (t.entries.empty()) throw std::domain_error("projective dimension of an empty Betti table");
    int pd = 0;
    for (const auto& [k, v] : t.entries) pd = std::max(pd, k.first);
    return pd;
}

int regularity(const BettiTable& t) {
    if (t.entries.empty()) throw std::domain_error("regularity of an empty Betti table");
    int reg = INT_MIN;
    for (const auto& [k, v] : t.entries) reg = std::max(reg, k.second - k.first);
    return reg;
}

bool CharIndependenceReport::tables_equal() const {
    return std::all_of(prime_mismatches.begin(), prime_mismatches.end(),
                       [](const auto& pm) { return pm.second.empty(); });
}

CharIndependenceReport char_independence(const MonomialIdeal& I, const std::vector<int>& primes) {
    CharIndependenceReport report;
    report.rational_table = betti_koszul(I, FieldSpec::rationals());
    for (int p : primes) {
        FieldSpec f = FieldSpec::prime(p);
        BettiTable t = betti_koszul(I, f);
        report.prime_mismatches.emplace_back(f, table_diff(report.rational_table, t));
    }
    // torsion certificate: Z homology of every complex the computation touches
    for_each_koszul_complex(I, [&](VarMask a, const SimplicialComplex& k) {
        for (const auto& [degree, group] : reduced_homology_Z(k))
            if (!group.torsion.empty()) report.torsion.push_back({a, degree, group.torsion});
    });
    return report;
}

SimplicialComplex gamma_complement(int n) {
    MonomialIdeal I = domino_ideal(n);
    SimplicialComplex delta = facet_complex(I);
    return complement_complex(delta, VariableUniverse::board(n).full_mask());
}

namespace {

bool concentrated_Z(const std::map<int, HomologyGroup>& h, int degree) {
    for (const auto& [d, g] : h) {
        if (!g.torsion.empty()) return false;
        if (d == degree ? g.free_rank != 1 : g.free_rank != 0) return false;
    }
    return h.count(degree) != 0;
}

bool all_trivial_Z(const std::map<int, HomologyGroup>& h) {
    return std::all_of(h.begin(), h.end(), [](const auto& kv) { return kv.second.trivial(); });
}

}  // namespace

SphereClaimReport verify_sphere_claims(int n) {
    if (n < 3) throw std::domain_error("verify_sphere_claims: n must be >= 3");
    SphereClaimReport report;
    report.n = n;
    SimplicialComplex gamma = gamma_complement(n);
    int y_n1 = (2 * n - 2) + (n - 1) - 1;  // id of y_{n-1}

    auto h_gamma = reduced_homology_Z(gamma);
    auto h_link = reduced_homology_Z(link(gamma, y_n1));
    auto h_del = reduced_homology_Z(deletion(gamma, y_n1));

    report.complement_is_sphere = concentrated_Z(h_gamma, n - 2);
    report.link_is_sphere = concentrated_Z(h_link, n - 3);
    report.deletion_acyclic = all_trivial_Z(h_del);

    std::ostringstream os;
    os << "n=" << n << ": H(Gamma_n^c)=Z@" << (n - 2) << (report.complement_is_sphere ? " ok" : " FAIL")
       << ", H(lk(y_" << n - 1 << "))=Z@" << (n - 3) << (report.link_is_sphere ? " ok" : " FAIL")
       << ", del(y_" << n - 1 << ") acyclic" << (report.deletion_acyclic ? " ok" : " FAIL");
    report.detail = os.str();
    return report;
}

}  // namespace domino
