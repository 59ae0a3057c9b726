// Serial reference kernels against their OpenMP versions.

#include <map>
#include <string>

#include <benchmark/benchmark.h>

#include "cuspidal/invariants.hpp"
#include "cuspidal/kernels.hpp"

using namespace cusp;

namespace {

const SurfaceDefinition& fixture(const std::string& name) {
    static std::map<std::string, SurfaceDefinition> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, load_surface_file(std::string(CUSP_FIXTURES) + "/" + name + ".surf")).first;
    return it->second;
}

void BM_ScanSerial(benchmark::State& st) {
    const auto& s = fixture("cycloid");
    for (auto _ : st) benchmark::DoNotOptimize(scan_singular_grid_serial(s, static_cast<int>(st.range(0)), {}));
}
void BM_ScanParallel(benchmark::State& st) {
    const auto& s = fixture("cycloid");
    for (auto _ : st) benchmark::DoNotOptimize(scan_singular_grid_parallel(s, static_cast<int>(st.range(0)), {}));
}
void BM_SampleGridSerial(benchmark::State& st) {
    const auto& s = fixture("fplus");
    for (auto _ : st) benchmark::DoNotOptimize(sample_grid_serial(s, static_cast<int>(st.range(0)), {}));
}
void BM_SampleGridParallel(benchmark::State& st) {
    const auto& s = fixture("fplus");
    for (auto _ : st) benchmark::DoNotOptimize(sample_grid_parallel(s, static_cast<int>(st.range(0)), {}));
}

SingularCurve curve_of(const SurfaceDefinition& s) {
    return trace_all_curves(s, locate_singular_points(s, 64)).front();
}

void BM_InvariantsSerial(benchmark::State& st) {
    const auto& s = fixture("fplus");
    const SingularCurve c = curve_of(s);
    for (auto _ : st) benchmark::DoNotOptimize(sample_invariants(s, c, static_cast<int>(st.range(0))));
}
void BM_InvariantsParallel(benchmark::State& st) {
    const auto& s = fixture("fplus");
    const SingularCurve c = curve_of(s);
    for (auto _ : st) benchmark::DoNotOptimize(sample_invariants_parallel(s, c, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleGridSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleGridParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InvariantsSerial)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InvariantsParallel)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
