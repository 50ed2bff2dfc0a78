#include "paralie/paralie.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace paralie;

void BM_ClosedForm(benchmark::State& state) {
    const ClassParams p{kBasicClasses[static_cast<std::size_t>(state.range(0))], 1.5, -0.5};
    for (auto _ : state) benchmark::DoNotOptimize(closed_form(p, 0.7, -1.2, 0.4));
    state.SetLabel(std::string(to_string(p.id)));
}
BENCHMARK(BM_ClosedForm)->DenseRange(0, 6);

void BM_ExpmOracle(benchmark::State& state) {
    const ClassParams p{kBasicClasses[static_cast<std::size_t>(state.range(0))], 1.5, -0.5};
    const Mat3 a = closed_form(p, 0.7, -1.2, 0.4).A;
    for (auto _ : state) benchmark::DoNotOptimize(expm_oracle(a));
    state.SetLabel(std::string(to_string(p.id)));
}
BENCHMARK(BM_ExpmOracle)->DenseRange(0, 6);

void BM_ClassifyManifold(benchmark::State& state) {
    const StructureConstants c = class_algebra({ClassId::F8, 0.8, 0});
    for (auto _ : state) benchmark::DoNotOptimize(classify_manifold(c));
}
BENCHMARK(BM_ClassifyManifold);

}  // namespace
BENCHMARK_MAIN();
