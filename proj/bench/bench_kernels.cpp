// Serial vs OpenMP kernels on a few mid-sized instances.
#include <benchmark/benchmark.h>

#include "ehrgraph/counting.hpp"
#include "ehrgraph/incidence.hpp"
#include "ehrgraph/polytope.hpp"

using namespace ehrgraph;

static void BM_count_q3_serial(benchmark::State& state) {
    HRep p = build_polytope(generate_family(Family::hypercube, {3}));
    const long long n = state.range(0);
    for (auto _ : state) {
        auto c = count_dilation_serial(p, n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_count_q3_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_count_q3_parallel(benchmark::State& state) {
    HRep p = build_polytope(generate_family(Family::hypercube, {3}));
    const long long n = state.range(0);
    for (auto _ : state) {
        auto c = count_dilation(p, n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_count_q3_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_vertices_q3_serial(benchmark::State& state) {
    HRep p = build_polytope(generate_family(Family::hypercube, {3}));
    for (auto _ : state) {
        auto vs = enumerate_vertices_serial(p);
        benchmark::DoNotOptimize(vs);
    }
}
BENCHMARK(BM_vertices_q3_serial)->Unit(benchmark::kMillisecond);

static void BM_vertices_q3_parallel(benchmark::State& state) {
    HRep p = build_polytope(generate_family(Family::hypercube, {3}));
    for (auto _ : state) {
        auto vs = enumerate_vertices(p);
        benchmark::DoNotOptimize(vs);
    }
}
BENCHMARK(BM_vertices_q3_parallel)->Unit(benchmark::kMillisecond);

static void BM_tu_c8_serial(benchmark::State& state) {
    IncidenceMatrix m = incidence_matrix(generate_family(Family::cycle, {8}));
    for (auto _ : state) {
        auto v = is_totally_unimodular_serial(m);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_tu_c8_serial)->Unit(benchmark::kMillisecond);

static void BM_tu_c8_parallel(benchmark::State& state) {
    IncidenceMatrix m = incidence_matrix(generate_family(Family::cycle, {8}));
    for (auto _ : state) {
        auto v = is_totally_unimodular(m);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_tu_c8_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
