// Serial reference kernels against their OpenMP versions.

#include "twistkit/kernels.hpp"
#include "twistkit/laurent.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace twistkit;

namespace
{

struct ScanFixture
{
    IntMatrix rows{{1, 0, 0, 1}, {0, 1, -1, 0}, {1, 1, 1, 1}, {-1, 2, 0, 1}};
    IntVector maslov{2, 0, 2, 2};
    IntegerBox box{{-12, -12, -12, -12}, {12, 12, 12, 12}};
};

TermMap random_terms(std::mt19937_64& rng, std::size_t count, Ring ring)
{
    std::uniform_int_distribution<int> ex(-6, 6), co(1, 9);
    TermMap t;
    while (t.size() < count)
        t[{ex(rng), ex(rng), ex(rng)}] = ring == Ring::GF2 ? 1 : co(rng);
    return t;
}

void BM_scan_serial(benchmark::State& state)
{
    ScanFixture f;
    LatticeFilter filter{f.rows, f.maslov, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_box_serial(filter, f.box));
}

void BM_scan_parallel(benchmark::State& state)
{
    ScanFixture f;
    LatticeFilter filter{f.rows, f.maslov, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_box_parallel(filter, f.box));
}

void BM_multiply_serial(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    auto a = random_terms(rng, static_cast<std::size_t>(state.range(0)), Ring::Rational);
    auto b = random_terms(rng, static_cast<std::size_t>(state.range(0)), Ring::Rational);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::multiply_serial(a, b, Ring::Rational));
}

void BM_multiply_parallel(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    auto a = random_terms(rng, static_cast<std::size_t>(state.range(0)), Ring::Rational);
    auto b = random_terms(rng, static_cast<std::size_t>(state.range(0)), Ring::Rational);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::multiply_parallel(a, b, Ring::Rational));
}

bool slow_predicate(std::size_t i)
{
    std::uint64_t h = i;
    for (int k = 0; k < 200; ++k)
        h = h * 6364136223846793005ULL + 1442695040888963407ULL;
    return i == 90'000 && h != 0;
}

void BM_first_match_serial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::first_match_serial(100'000, slow_predicate));
}

void BM_first_match_parallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::first_match_parallel(100'000, slow_predicate));
}

} // namespace

BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_match_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_match_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
