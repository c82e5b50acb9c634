// Parallel kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include <hypcount/counting.hpp>
#include <hypcount/kummer.hpp>
#include <hypcount/series.hpp>

using namespace hypcount;

namespace
{

series random_series(int order, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 12);
    series s(order);
    for (int i = 0; i <= order; ++i) {
        rational r(num(rng), den(rng));
        r.canonicalize();
        s[i] = r;
    }
    return s;
}

void BM_mul(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const series a = random_series(order, 1);
    const series b = random_series(order, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
    state.SetComplexityN(order);
}

void BM_mul_serial(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const series a = random_series(order, 1);
    const series b = random_series(order, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_serial(a, b));
    }
    state.SetComplexityN(order);
}

void BM_admissible_configs(benchmark::State &state)
{
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(admissible_configs(degree));
    }
}

void BM_admissible_configs_serial(benchmark::State &state)
{
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(admissible_configs_serial(degree));
    }
}

void BM_genus_total(benchmark::State &state)
{
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(genus_total(g, 32));
    }
}

} // namespace

BENCHMARK(BM_mul)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_mul_serial)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_admissible_configs)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_admissible_configs_serial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_genus_total)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
