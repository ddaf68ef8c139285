#include <benchmark/benchmark.h>

#include "domino/betti.hpp"
#include "domino/recursion.hpp"
#include "domino/splitting.hpp"
#include "domino/tilings.hpp"

namespace {

void BM_EnumerateTilings(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(domino::enumerate_tilings(n));
}
BENCHMARK(BM_EnumerateTilings)->Arg(8)->Arg(12);

void BM_HomologyComplement(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    domino::SimplicialComplex gamma = domino::gamma_complement(n);
    for (auto _ : state) benchmark::DoNotOptimize(domino::reduced_homology_Z(gamma));
}
BENCHMARK(BM_HomologyComplement)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    domino::ChainComplex cc = domino::ChainComplex::from_complex(domino::gamma_complement(n));
    int level = cc.top_level() / 2;
    auto cols = cc.boundary(level);
    std::vector<std::vector<long long>> dense(cc.faces(level - 1).size(),
                                              std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& e : cols[c]) dense[e.row][c] = e.value;
    for (auto _ : state) benchmark::DoNotOptimize(domino::smith_normal_form(dense));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BettiKoszul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    domino::MonomialIdeal ideal = domino::domino_ideal(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(domino::betti_koszul(ideal, domino::FieldSpec::rationals()));
}
BENCHMARK(BM_BettiKoszul)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BettiHochster(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    domino::MonomialIdeal ideal = domino::domino_ideal(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(domino::betti_hochster(ideal, domino::FieldSpec::rationals()));
}
BENCHMARK(BM_BettiHochster)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VerifySplitting(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    domino::SplittingWitness w = domino::split_domino(n);
    for (auto _ : state) benchmark::DoNotOptimize(domino::verify_splitting(w));
}
BENCHMARK(BM_VerifySplitting)->Arg(5)->Arg(6)->Arg(7);

void BM_BettiRecursive(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(domino::betti_recursive(n, domino::BaseCaseTable::ideal_indexed()));
}
BENCHMARK(BM_BettiRecursive)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
