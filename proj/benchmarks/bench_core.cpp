#include <benchmark/benchmark.h>

#include "ars/calculus.hpp"
#include "ars/hopf.hpp"
#include "ars/rmatrix.hpp"
#include "ars/suite.hpp"

using namespace ars;

namespace {

std::vector<std::vector<Gen>> sample_words(std::size_t count, std::size_t len) {
    SeededRng rng(99);
    std::vector<std::vector<Gen>> words;
    static constexpr Gen kGens[] = {Gen::F, Gen::Finv, Gen::A, Gen::B, Gen::C, Gen::D};
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<Gen> w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(kGens[rng.below(6)]);
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace

static void BM_Straighten(benchmark::State& state) {
    const auto words = sample_words(64, state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(straighten(words[i++ % words.size()]));
    }
}
BENCHMARK(BM_Straighten)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_ElementProduct(benchmark::State& state) {
    SeededRng rng(7);
    const AlgebraElement x = random_element(rng, state.range(0), false);
    const AlgebraElement y = random_element(rng, state.range(0), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_ElementProduct)->Arg(2)->Arg(4)->Arg(6);

static void BM_Coproduct(benchmark::State& state) {
    SeededRng rng(11);
    const AlgebraElement x = random_element(rng, state.range(0), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coproduct(x));
    }
}
BENCHMARK(BM_Coproduct)->Arg(2)->Arg(4);

static void BM_YangBaxter(benchmark::State& state) {
    const RMatrix r = build_r();
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_ybe(r));
    }
}
BENCHMARK(BM_YangBaxter);

static void BM_ExteriorDerivative(benchmark::State& state) {
    const Calculus calc{};
    SeededRng rng(13);
    const AlgebraElement x = random_element(rng, state.range(0), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(calc.exterior_d(x));
    }
}
BENCHMARK(BM_ExteriorDerivative)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
