#include <benchmark/benchmark.h>

#include <arcdiag/arc_number.hpp>
#include <arcdiag/census.hpp>
#include <arcdiag/obstruction.hpp>
#include <arcdiag/realize.hpp>
#include <arcdiag/render.hpp>

namespace {

void BM_CanonicalCode(benchmark::State& state) {
    const arcdiag::ChordDiagram d = arcdiag::make_c(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::canonical_code(d));
    }
}
BENCHMARK(BM_CanonicalCode)->Arg(4)->Arg(16)->Arg(64);

void BM_ArcNumber(benchmark::State& state) {
    const arcdiag::ChordDiagram d = arcdiag::make_c(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::arc_number(d));
    }
}
BENCHMARK(BM_ArcNumber)->Arg(4)->Arg(16)->Arg(64);

void BM_CuttingPairScan(benchmark::State& state) {
    const arcdiag::ChordDiagram d = arcdiag::make_c(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::scan_cutting_pairs(d));
    }
}
BENCHMARK(BM_CuttingPairScan)->Arg(16)->Arg(64);

void BM_Classes(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::classes(m));
    }
}
BENCHMARK(BM_Classes)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ClassesThreaded(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            arcdiag::classes(6, 8, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ClassesThreaded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GenusMin(benchmark::State& state) {
    const arcdiag::ChordDiagram d = arcdiag::make_c(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::genus_min(d));
    }
}
BENCHMARK(BM_GenusMin)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_ContainsObstruction(benchmark::State& state) {
    const arcdiag::ChordDiagram d = arcdiag::make_c(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::contains_obstruction(d, 1));
    }
}
BENCHMARK(BM_ContainsObstruction)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_RenderSvg(benchmark::State& state) {
    const arcdiag::ChordDiagram d = arcdiag::make_c(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arcdiag::render_svg(d));
    }
}
BENCHMARK(BM_RenderSvg)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
