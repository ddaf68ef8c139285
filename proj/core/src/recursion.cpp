#include "domino/recursion.hpp"

#include <sstream>

#include "domino/tilings.hpp"

namespace domino {

namespace {

long long binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    long long r = 1;
    for (int t = 0; t < k; ++t) r = r * (m - t) / (t + 1);
    return r;
}

BettiTable anchor_table(int n) {
    BettiTable t;
    t.field = FieldSpec::rationals();
    switch (n) {
        case 1:
            t.add(0, 1, 1);
            break;
        case 2:
            t.add(0, 2, 2);
            t.add(1, 4, 1);
            break;
        case 3:
            t.add(0, 3, 3);
            t.add(1, 5, 2);
            t.add(1, 6, 1);
            t.add(2, 7, 1);
            break;
        default:
            throw std::logic_error("anchor tables exist only for n <= 3");
    }
    return t;
}

}  // namespace

long long BaseCaseTable::lookup(int i, int j) const {
    int ip = i - shift;  // index into the printed table
    if (j == 5 && ip == 1) return 1;
    if (j == 6 && ip == 1) return 1;
    if (j == 7 && ip == 2) return 1;
    return 0;
}

BettiTable betti_recursive(int n, const BaseCaseTable& base) {
    if (n < 4) throw std::domain_error("betti_recursive: n must be >= 4");
    std::vector<BettiTable> memo(n + 1);
    for (int t = 1; t <= std::min(n, 3); ++t) memo[t] = anchor_table(t);
    for (int w = 4; w <= n; ++w) {
        BettiTable t;
        t.field = FieldSpec::rationals();
        for (const auto& [k, v] : memo[w - 1].entries) t.add(k.first, k.second + 1, v);
        for (const auto& [k, v] : memo[w - 2].entries) t.add(k.first, k.second + 2, v);
        // beta_{i-1-k, j-4-2m-k}(I_{w-2-m}) occurs with multiplicity C(m,k)
        for (int m = 0; m <= w - 4; ++m)
            for (int k = 0; k <= m; ++k) {
                long long c = binomial(m, k);
                for (const auto& [key, v] : memo[w - 2 - m].entries)
                    t.add(key.first + 1 + k, key.second + 4 + 2 * m + k, c * v);
            }
        // closing terms over the V_3 ∩ U_3 base case
        for (int k = 0; k <= w - 4; ++k) {
            long long c = binomial(w - 4, k);
            for (int j = 0; j <= 3 * w; ++j)
                for (int i = 0; i <= w + 1; ++i) {
                    long long v = base.lookup(i - 1 - k, j - 2 * w + 6 - k) +
                                  base.lookup(i - 2 - k, j - 2 * w + 5 - k);
                    if (v) t.add(i, j, c * v);
                }
        }
        memo[w] = std::move(t);
    }
    return memo[n];
}

MonomialIdeal domino_intersection(int n) {
    SplittingWitness w = split_domino(n);
    return intersect(w.V, w.U);
}

IdentityCheckReport splitting_identity_check(int n, FieldSpec f) {
    if (n < 3) throw std::domain_error("splitting_identity_check: n must be >= 3");
    IdentityCheckReport report;
    report.n = n;
    report.field = f;
    BettiTable lhs = betti_koszul(domino_ideal(n), f);
    BettiTable rhs = betti_koszul(domino_ideal(n - 1), f).shifted(0, 1);
    for (const auto& [k, v] : betti_koszul(domino_ideal(n - 2), f).entries)
        rhs.add(k.first, k.second + 2, v);
    for (const auto& [k, v] : betti_koszul(domino_intersection(n), f).entries)
        rhs.add(k.first + 1, k.second, v);
    report.mismatches = table_diff(lhs, rhs);
    return report;
}

RelationsCheckReport relations_check(int n, FieldSpec f) {
    if (n < 5) throw std::domain_error("relations_check: n must be >= 5");
    RelationsCheckReport report;
    report.n = n;
    report.field = f;
    SplittingWitness hat = split_intersection(n);
    BettiTable w_prev = betti_koszul(domino_intersection(n - 1), f);
    report.hat_v =
        table_diff(betti_koszul(hat.V, f), betti_koszul(domino_ideal(n - 2), f).shifted(0, 4));
    report.hat_u = table_diff(betti_koszul(hat.U, f), w_prev.shifted(0, 2));
    report.hat_intersection =
        table_diff(betti_koszul(intersect(hat.V, hat.U), f), w_prev.shifted(0, 3));
    return report;
}

RecursionReconciliation reconcile_recursion(int max_n, FieldSpec f) {
    if (max_n < 4) throw std::domain_error("reconcile_recursion: max_n must be >= 4");
    RecursionReconciliation rec;
    std::vector<BettiTable> direct(max_n + 1);
    for (int n = 4; n <= max_n; ++n) direct[n] = betti_koszul(domino_ideal(n), f);

    for (int shift : {0, -1}) {
        bool all = true;
        for (int n = 4; n <= max_n && all; ++n)
            all = betti_recursive(n, BaseCaseTable{shift}).same_entries(direct[n]);
        rec.match_by_shift[shift] = all;
    }
    int matches = 0;
    for (const auto& [s, ok] : rec.match_by_shift)
        if (ok) {
            ++matches;
            rec.unique_shift = s;
        }
    if (matches != 1) rec.unique_shift.reset();

    BettiTable w3 = betti_koszul(domino_intersection(3), f);
    std::ostringstream os;
    os << "Base-case indexing finding for the closed Betti recursion (checked against direct\n"
       << "computation over " << f.to_string() << " for n = 4.." << max_n << "):\n"
       << "  direct table of V_3 ∩ U_3 (ideal indexing):";
    for (const auto& [k, v] : w3.entries)
        os << " beta_{" << k.first << "," << k.second << "}=" << v;
    os << "\n  printed base case:                        "
       << " beta_{1,5}=1 beta_{1,6}=1 beta_{2,7}=1\n";
    for (const auto& [s, ok] : rec.match_by_shift)
        os << "  shift s=" << s << " (base consumed as beta_{i" << (s == 0 ? "" : "+1") << ",j}): "
           << (ok ? "recursion == direct for every n" : "recursion != direct") << "\n";
    if (rec.unique_shift)
        os << "  unique reconciling interpretation: s=" << *rec.unique_shift
           << "; the printed base case sits one homological step above the ideal-indexed table.";
    else
        os << "  no unique reconciling interpretation found.";
    rec.narrative = os.str();
    return rec;
}

}  // namespace domino
