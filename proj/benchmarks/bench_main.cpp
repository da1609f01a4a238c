#include <benchmark/benchmark.h>

#include <random>

#include "zcolor/cabling.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/parallel_coloring.hpp"
#include "zcolor/pd_io.hpp"
#include "zcolor/rewrite.hpp"

using namespace zcolor;

namespace {

Diagram load(const char* name) { return read_pd_file(std::string(ZCOLOR_CORPUS_DIR) + "/" + name + ".pd"); }

void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->RangeMultiplier(2)->Range(4, 32);

// Coloring matrices of k-parallels of the trefoil grow as 9k^2 crossings.
void BM_DeterminantOfParallel(benchmark::State& state) {
  Diagram d = parallel(load("trefoil"), {{static_cast<int>(state.range(0))}, {}}).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(determinant(d));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_DeterminantOfParallel)->DenseRange(1, 5);

void BM_FoxCount(benchmark::State& state) {
  Diagram d = load("hopf_4_4");
  for (auto _ : state) benchmark::DoNotOptimize(fox_coloring_count(d, state.range(0)));
}
BENCHMARK(BM_FoxCount)->Arg(3)->Arg(7)->Arg(1000003);

void BM_PaletteSearch(benchmark::State& state) {
  Diagram d = load(state.range(0) ? "hopf_6_6" : "hopf_4_4");
  auto lattice = kernel_lattice(d);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_palette_on_diagram(d, lattice));
}
BENCHMARK(BM_PaletteSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EvenParallelColoring(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Diagram base = load("hopf");
  for (auto _ : state) {
    auto cable = parallel(base, {{k, k}, {}});
    benchmark::DoNotOptimize(color_even_parallel(cable));
  }
}
BENCHMARK(BM_EvenParallelColoring)->DenseRange(4, 12, 2);

void BM_DeleteColor(benchmark::State& state) {
  auto cable = parallel(load("hopf"), {{4, 4}, {}});
  Coloring c = color_even_parallel(cable);
  for (auto _ : state) benchmark::DoNotOptimize(delete_color_moves(cable.diagram, c, 3));
}
BENCHMARK(BM_DeleteColor)->Unit(benchmark::kMillisecond);

void BM_TwoParallelReduce(benchmark::State& state) {
  Diagram d = load("trefoil_writhe0");
  for (auto _ : state) {
    auto r = color_two_parallel(d);
    Rewriter rw(r.cable.diagram, r.coloring);
    delete_color_moves(rw, 4);
    if (palette(*rw.coloring()).count(-1)) delete_color_moves(rw, -1);
    benchmark::DoNotOptimize(rw.diagram());
  }
}
BENCHMARK(BM_TwoParallelReduce)->Unit(benchmark::kMillisecond);

void BM_SimplifyChain(benchmark::State& state) {
  Diagram d = parse_pd("X[3,2,4,1] X[6,2,3,1] X[7,5,8,6] X[10,5,7,4] X[11,9,12,10] X[12,9,11,8]");
  std::map<EdgeLabel, Integer> pins;
  const int values[] = {0, 3, 4, 8};
  for (std::size_t i = 0; i < d.components().size(); ++i) pins[d.components()[i].back()] = values[i];
  Coloring c = solve_partial(d, pins)->coloring;
  for (auto _ : state) benchmark::DoNotOptimize(to_simple_coloring(d, c));
}
BENCHMARK(BM_SimplifyChain)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
