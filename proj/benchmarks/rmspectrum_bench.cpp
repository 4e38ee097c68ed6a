#include <benchmark/benchmark.h>

#include <random>

#include "rmspectrum/anf.hpp"
#include "rmspectrum/enumeration.hpp"
#include "rmspectrum/formulas.hpp"
#include "rmspectrum/truth_table.hpp"

using namespace rmspec;

namespace {

TruthTable random_table(int n) {
    std::mt19937_64 rng(7);
    TruthTable t(n);
    for (auto& w : t.words()) w = rng();
    if (n < 6) t = t & TruthTable::ones(n);
    return t;
}

void BM_MoebiusTransform(benchmark::State& state) {
    auto t = random_table(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        moebius_transform(t);
        benchmark::DoNotOptimize(t.words().data());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(t.words().size() * 8));
}
BENCHMARK(BM_MoebiusTransform)->DenseRange(10, 20, 5);

void BM_Weight(benchmark::State& state) {
    const auto t = random_table(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(weight(t));
}
BENCHMARK(BM_Weight)->DenseRange(10, 20, 5);

void BM_TwoMonomialCheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_two_monomial_formula(10, 5).mismatches);
}
BENCHMARK(BM_TwoMonomialCheck)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
    EnumerationOptions opts;
    opts.m = static_cast<int>(state.range(0));
    opts.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_general_concat(opts).total);
}
BENCHMARK(BM_Enumerate)->Args({3, 1})->Args({4, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
