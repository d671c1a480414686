#include <benchmark/benchmark.h>

#include "etaq/identities.hpp"
#include "etaq/minimal_models.hpp"
#include "etaq/ode.hpp"
#include "etaq/special_series.hpp"

using namespace etaq;

static void BM_SeriesMul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const TruncatedSeries a = partition_series(order);
    const TruncatedSeries b = eisenstein(2, order);
    for (auto _ : state) {
        TruncatedSeries c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(256)->Arg(1024);

static void BM_SeriesInvert(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const TruncatedSeries e = euler_product(order);
    for (auto _ : state) {
        TruncatedSeries inv = invert(e);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_SeriesInvert)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_PartitionSeries(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TruncatedSeries p = partition_series(order);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PartitionSeries)->Arg(500)->Arg(2504);

static void BM_ModifiedCharacter(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PrefixedSeries ch = modified_character(2, 1, order);
        benchmark::DoNotOptimize(ch);
    }
}
BENCHMARK(BM_ModifiedCharacter)->Arg(200)->Arg(1000);

static void BM_DeterminantIdentityLhs(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        TruncatedSeries lhs = wronskian_identity_lhs(k, 100);
        benchmark::DoNotOptimize(lhs);
    }
}
BENCHMARK(BM_DeterminantIdentityLhs)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_OdeReconstruct(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const int order = 60;
    std::vector<PrefixedSeries> family;
    for (unsigned i = 1; i <= k; ++i)
        family.push_back(modified_character(k, i, order));
    for (auto _ : state) {
        LinearODE ode = ode_reconstruct(family, order);
        benchmark::DoNotOptimize(ode);
    }
}
BENCHMARK(BM_OdeReconstruct)->Arg(2)->Arg(3)->Arg(4);

static void BM_VerifyRr1(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        VerificationReport report = verify({"rr1", std::nullopt}, order);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyRr1)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
