// Serial reference paths against the OpenMP kernels.

#include <omp.h>

#include <benchmark/benchmark.h>

#include "asmgyr/enumeration.hpp"
#include "asmgyr/orbits.hpp"

namespace {

using namespace asmgyr;

const int kWorkers = omp_get_max_threads();

void BM_CountSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_asms_serial(static_cast<int>(state.range(0))));
}

void BM_CountParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_asms(static_cast<int>(state.range(0)), kWorkers));
}

void BM_ClassifySerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0)), 1));
}

void BM_ClassifyParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0)), kWorkers));
}

void BM_OrbitSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit_partition_serial(static_cast<int>(state.range(0)), NamedMap::G2n));
    }
}

void BM_OrbitParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit_partition(static_cast<int>(state.range(0)), NamedMap::G2n, kWorkers));
    }
}

}  // namespace

BENCHMARK(BM_CountSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitSerial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitParallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
