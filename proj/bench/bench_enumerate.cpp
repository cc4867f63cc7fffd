// Parallel cell enumeration against the serial reference.

#include <benchmark/benchmark.h>

#include "paritykit/cells.hpp"
#include "paritykit/generators.hpp"

using namespace paritykit;

namespace {

void run(benchmark::State& state, const ParityStructure& c, std::size_t max_dim, bool parallel) {
    for (auto _ : state) {
        auto cells = parallel ? enumerate_cells(c, max_dim) : enumerate_cells_serial(c, max_dim);
        benchmark::DoNotOptimize(cells.data());
        state.counters["cells"] = static_cast<double>(cells.size());
    }
}

void BM_oriental3(benchmark::State& s) { run(s, oriental(3), 3, s.range(0)); }
void BM_oriental4(benchmark::State& s) { run(s, oriental(4), 4, s.range(0)); }
void BM_cube3(benchmark::State& s) { run(s, cube(3), 3, s.range(0)); }

}  // namespace

BENCHMARK(BM_oriental3)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oriental4)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cube3)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
