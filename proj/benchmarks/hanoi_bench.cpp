#include <benchmark/benchmark.h>

#include "hanoi/frame_stewart.hpp"
#include "hanoi/search.hpp"

using namespace hanoi;

static void BM_Bidirectional(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t explored = 0;
  for (auto _ : state) {
    const SearchResult r = exact_min_moves(n, 4, 0, 1);
    explored = r.explored;
    benchmark::DoNotOptimize(r.optimum);
  }
  state.counters["explored"] = static_cast<double>(explored);
}
BENCHMARK(BM_Bidirectional)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void BM_Forward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SearchOptions o;
  o.method = SearchMethod::kForward;
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_moves(n, 4, 0, 1, o).optimum);
}
BENCHMARK(BM_Forward)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_NoSymmetry(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SearchOptions o;
  o.use_symmetry = false;
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_moves(n, 4, 0, 1, o).optimum);
}
BENCHMARK(BM_NoSymmetry)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_FrameStewartTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FrameStewartTable t(n, 8);
    benchmark::DoNotOptimize(t.count(n, 8));
  }
}
BENCHMARK(BM_FrameStewartTable)->Arg(100)->Arg(1000);

static void BM_GenerateSolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_solution(n, 4, 0, 1).size());
}
BENCHMARK(BM_GenerateSolution)->Arg(10)->Arg(20)->Arg(30);

static void BM_EnumerateSolutions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_minimal_solutions(n, 4, 0, 1).sequences.size());
  }
}
BENCHMARK(BM_EnumerateSolutions)->DenseRange(4, 6)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
