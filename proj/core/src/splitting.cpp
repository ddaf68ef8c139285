#include "domino/splitting.hpp"

#include <algorithm>
#include <random>

#include "domino/tilings.hpp"

namespace domino {

namespace {

SplittingWitness split_by_keys(const MonomialIdeal& I, VarMask v_key, VarMask u_key,
                               VarMask phi, VarMask psi) {
    std::vector<SquarefreeMonomial> v_gens, u_gens;
    for (const auto& g : I.generators()) {
        if ((g.support & v_key) == v_key)
            v_gens.push_back(g);
        else if ((g.support & u_key) == u_key)
            u_gens.push_back(g);
        else
            throw std::logic_error("generator matches neither side of the split");
    }
    int u = I.universe_size();
    return {MonomialIdeal(u, std::move(v_gens)), MonomialIdeal(u, std::move(u_gens)),
            {u, phi}, {u, psi}};
}

}  // namespace

SplittingWitness split_domino(int n) {
    if (n < 3) throw std::domain_error("split_domino: n must be >= 3");
    MonomialIdeal I = domino_ideal(n);
    VarMask y_n = bit((2 * n - 2) + n - 1);
    VarMask x_pair = bit(n - 2) | bit(2 * n - 3);
    return split_by_keys(I, y_n, x_pair, x_pair, y_n);
}

SplittingWitness split_intersection(int n) {
    if (n < 4) throw std::domain_error("split_intersection: n must be >= 4");
    SplittingWitness outer = split_domino(n);
    MonomialIdeal W = intersect(outer.V, outer.U);
    VarMask y_n1 = bit((2 * n - 2) + n - 2);
    VarMask x_pair = bit(n - 3) | bit(2 * n - 4);
    return split_by_keys(W, y_n1, x_pair, x_pair, y_n1);
}

SplittingReport verify_splitting(const SplittingWitness& w, const SplittingVerifyOptions& options) {
    SplittingReport report;

    // precondition: G(V) ⊔ G(U) is the minimal generating set of V + U
    std::vector<SquarefreeMonomial> all = w.V.generators();
    all.insert(all.end(), w.U.generators().begin(), w.U.generators().end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (i != j && divides(all[i], all[j])) {
                report.failure = "G(V) and G(U) are not disjoint and jointly minimal";
                return report;
            }

    MonomialIdeal W = intersect(w.V, w.U);
    const auto& gens = W.generators();
    for (const auto& g : gens) {
        if (!divides(w.phi_divisor, g) || !divides(w.psi_divisor, g)) {
            report.failure = "splitting divisor does not divide a generator of V ∩ U";
            return report;
        }
    }
    report.structural_ok = true;

    VarMask phi = w.phi_divisor.support;
    VarMask psi = w.psi_divisor.support;

    report.s1_ok = true;
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
        VarMask g = gens[gi].support;
        VarMask joined = (g & ~phi) | (g & ~psi);
        if (joined != g) {
            report.s1_ok = false;
            report.failure = "S1 fails: lcm(w/phi, w/psi) != w on generator #" + std::to_string(gi);
            report.counterexample_subset = std::vector<int>{gi};
            break;
        }
    }

    report.s2_ok = true;
    int count = static_cast<int>(gens.size());
    auto strict = [](VarMask part, VarMask whole) { return part != whole && (part & whole) == part; };
    auto record_s2_failure = [&](const std::vector<int>& subset) {
        report.s2_ok = false;
        if (report.failure.empty()) {
            report.failure = "S2 fails: a mapped lcm does not strictly divide lcm G'";
            report.counterexample_subset = subset;
        }
    };

    if (options.s2_samples) {
        // sampling fallback for generator sets too large to exhaust
        report.s2_exhaustive = false;
        std::mt19937_64 rng(options.seed);
        std::uint64_t full = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
        for (std::uint64_t trial = 0; trial < *options.s2_samples && report.s2_ok; ++trial) {
            std::uint64_t subset = rng() & full;
            if (subset == 0) continue;
            VarMask l = 0, lphi = 0, lpsi = 0;
            std::vector<int> chosen;
            for (int idx = 0; idx < count; ++idx)
                if (subset >> idx & 1) {
                    VarMask g = gens[idx].support;
                    l |= g;
                    lphi |= g & ~phi;
                    lpsi |= g & ~psi;
                    chosen.push_back(idx);
                }
            if (!strict(lphi, l) || !strict(lpsi, l)) record_s2_failure(chosen);
        }
        return report;
    }

    // exhaustive over the 2^|G(W)| - 1 nonempty subsets, with running lcms
    // carried down a DFS over include/exclude decisions
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int idx, VarMask l, VarMask lphi, VarMask lpsi) -> bool {
        if (idx == count) {
            if (chosen.empty()) return true;
            if (!strict(lphi, l) || !strict(lpsi, l)) {
                record_s2_failure(chosen);
                return false;
            }
            return true;
        }
        VarMask g = gens[idx].support;
        chosen.push_back(idx);
        if (!self(self, idx + 1, l | g, lphi | (g & ~phi), lpsi | (g & ~psi))) return false;
        chosen.pop_back();
        return self(self, idx + 1, l, lphi, lpsi);
    };
    dfs(dfs, 0, 0, 0, 0);

    return report;
}

}  // namespace domino
