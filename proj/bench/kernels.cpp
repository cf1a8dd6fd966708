// Serial reference kernels against their OpenMP versions.
// Run with OMP_NUM_THREADS to vary the thread count.

#include <benchmark/benchmark.h>

#include "novcoh/bicomplex.hpp"
#include "novcoh/fuzz.hpp"
#include "novcoh/linalg.hpp"

using namespace novcoh;

namespace {

ScalarMatrix square(const BaseRing& ring, std::size_t n, std::uint64_t seed) {
    fuzz::Rng rng(seed);
    return fuzz::random_matrix(rng, ring, n, n, 50);
}

LaurentMatrix laurent_square(std::size_t n, std::uint64_t seed) {
    fuzz::Rng rng(seed);
    const auto ring = BaseRing::prime_field(101);
    LaurentMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = LaurentPoly(ring, {{-1, fuzz::draw_range(rng, 0, 100)}, {0, fuzz::draw_range(rng, 0, 100)},
                                         {1, fuzz::draw_range(rng, 0, 100)}});
    return m;
}

DoubleComplexWindow wide_torus(int width) {
    fuzz::Rng rng(11);
    const auto c = fuzz::random_complex(rng, BaseRing::prime_field(5), -2, 2, 6);
    return torus_bicomplex(c, fuzz::random_chain_map(rng, c), 0, width - 1);
}

template <bool Parallel>
void multiply_qq(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = square(BaseRing::rationals(), n, 1);
    const auto b = square(BaseRing::rationals(), n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Parallel ? parallel::multiply(a, b) : serial::multiply(a, b));
    }
}

template <bool Parallel>
void row_reduce_fp(benchmark::State& state) {
    const auto a = square(BaseRing::prime_field(10007), static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(Parallel ? parallel::row_reduce(a) : serial::row_reduce(a));
}

template <bool Parallel>
void bareiss_laurent(benchmark::State& state) {
    const auto a = laurent_square(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(Parallel ? parallel::bareiss_rank(a) : serial::bareiss_rank(a));
}

template <bool Parallel>
void check_laws_torus(benchmark::State& state) {
    const auto d = wide_torus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Parallel ? parallel::check_laws(d) : serial::check_laws(d));
}

}  // namespace

BENCHMARK(multiply_qq<false>)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(multiply_qq<true>)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(row_reduce_fp<false>)->Arg(64)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK(row_reduce_fp<true>)->Arg(64)->Arg(192)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bareiss_laurent<false>)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(bareiss_laurent<true>)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(check_laws_torus<false>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(check_laws_torus<true>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
