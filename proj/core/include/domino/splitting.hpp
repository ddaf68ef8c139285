#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domino/monomial.hpp"

namespace domino {

// A candidate splitting I = V + U together with the splitting function,
// represented by its divisor monomials: phi(w) = w / phi_divisor and
// psi(w) = w / psi_divisor on the generators of V ∩ U.
struct SplittingWitness {
    MonomialIdeal V;
    MonomialIdeal U;
    SquarefreeMonomial phi_divisor;
    SquarefreeMonomial psi_divisor;
};

// I_n = V_n + U_n: V_n collects the tilings containing y_n, U_n those
// containing the pair x_{n-1} x_{2n-2}.  Requires n >= 3.
SplittingWitness split_domino(int n);

// V_n ∩ U_n = V̂_n + Û_n, split by y_{n-1} against x_{n-2} x_{2n-3}.
// Requires n >= 4.
SplittingWitness split_intersection(int n);

struct SplittingReport {
    bool structural_ok = false;  // divisors divide every generator of V ∩ U,
                                 // G(V) and G(U) disjoint and jointly minimal
    bool s1_ok = false;          // lcm(w/phi, w/psi) = w on G(V ∩ U)
    bool s2_ok = false;          // lcm phi(G') and lcm psi(G') strictly divide lcm G'
    bool s2_exhaustive = true;   // false when the sampling fallback was used
    std::string failure;         // human-readable description of the first failure
    // first counterexample for an S2 failure, as indices into G(V ∩ U)
    std::optional<std::vector<int>> counterexample_subset;

    bool passed() const { return structural_ok && s1_ok && s2_ok; }
};

struct SplittingVerifyOptions {
    // (S2) runs over all 2^|G(V ∩ U)| - 1 subsets by default; setting
    // s2_samples checks that many pseudo-random subsets instead (off by
    // default, intended for generator sets too large to exhaust)
    std::optional<std::uint64_t> s2_samples;
    std::uint64_t seed = 0x5eed;
};

// Checks (S1) and, exhaustively over all nonempty subsets of G(V ∩ U), (S2).
// A divisor that fails to divide some generator is a structural error and is
// reported distinctly from an S1/S2 failure.
SplittingReport verify_splitting(const SplittingWitness& w,
                                 const SplittingVerifyOptions& options = {});

}  // namespace domino
