#include <benchmark/benchmark.h>

#include "lenscf/atlas.hpp"
#include "lenscf/blowup.hpp"
#include "lenscf/verify.hpp"

using namespace lenscf;

namespace {

Int fib(long n) {
    Int a = 0, b = 1;
    for (long i = 0; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace

// Worst-case expansion length per digit: consecutive Fibonacci numbers.
static void BM_hj_expand_fibonacci(benchmark::State& state) {
    const Int p = fib(state.range(0) + 2);
    const Int q = fib(state.range(0) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(hj_expand(p, q));
}
BENCHMARK(BM_hj_expand_fibonacci)->Arg(20)->Arg(200)->Arg(2000);

// Thin bounds: L(p,1) has the all-2 string of length p-1, where pruning
// collapses the search to a single surviving word.
static void BM_enumerate_thin(benchmark::State& state) {
    const long p = state.range(0);
    const Word b = hj_expand(p, p - 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_zero_words_bounded(b));
}
BENCHMARK(BM_enumerate_thin)->Arg(20)->Arg(60)->Arg(120);

// Dense bounds: the all-3 string of length k belongs to
// (fib(2k+2), fib(2k+1)) and admits many bounded zero words.
static void BM_enumerate_dense(benchmark::State& state) {
    const long k = state.range(0);
    const Word b = hj_expand(fib(2 * k + 2), fib(2 * k + 2) - fib(2 * k + 1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_zero_words_bounded(b));
}
BENCHMARK(BM_enumerate_dense)->DenseRange(5, 10);

// The certified brute-force oracle on the same dense bounds, for comparison
// against the pruned generator above.
static void BM_oracle_dense(benchmark::State& state) {
    const long k = state.range(0);
    const Word b = hj_expand(fib(2 * k + 2), fib(2 * k + 2) - fib(2 * k + 1));
    for (auto _ : state) benchmark::DoNotOptimize(bounded_zero_words_oracle(b));
}
BENCHMARK(BM_oracle_dense)->DenseRange(5, 7);

static void BM_build_atlas_dense(benchmark::State& state) {
    const long k = state.range(0);
    const LensSpace lens = make_lens(fib(2 * k + 2), fib(2 * k + 1));
    for (auto _ : state) benchmark::DoNotOptimize(build_atlas(lens));
}
BENCHMARK(BM_build_atlas_dense)->DenseRange(5, 8);

static void BM_reduce_long_resolution(benchmark::State& state) {
    const Word w = artin_word(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_zero(w));
}
BENCHMARK(BM_reduce_long_resolution)->Arg(50)->Arg(200)->Arg(800);

static void BM_sweep_p60(benchmark::State& state) {
    for (auto _ : state) {
        long fillings = 0;
        sweep(60, SweepFilter::all, [&](const Atlas& a) {
            fillings += static_cast<long>(a.fillings.size());
        });
        benchmark::DoNotOptimize(fillings);
    }
}
BENCHMARK(BM_sweep_p60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
