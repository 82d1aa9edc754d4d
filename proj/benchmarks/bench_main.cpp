#include <benchmark/benchmark.h>

#include <vector>

#include "dichro/amalgam.hpp"
#include "dichro/arrow.hpp"
#include "dichro/generators.hpp"
#include "dichro/orientation.hpp"
#include "dichro/partition.hpp"

using namespace dichro;

namespace {

void BM_DichromaticTournament(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Digraph> pool;
    for (std::uint64_t s = 0; s < 16; ++s) pool.push_back(random_tournament(n, s));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(dichromatic_number(pool[i++ % pool.size()]).value());
}
BENCHMARK(BM_DichromaticTournament)->DenseRange(8, 16, 4);

// Crosses the 64-vertex word boundary.
void BM_DichromaticSparse(benchmark::State& state) {
    const auto d = random_digraph(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state) benchmark::DoNotOptimize(dichromatic_number(d).value());
}
BENCHMARK(BM_DichromaticSparse)->Arg(40)->Arg(80);

void BM_ChromaticShift(benchmark::State& state) {
    const auto g = shift_graph(2, static_cast<std::size_t>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).value());
}
BENCHMARK(BM_ChromaticShift)->Arg(6)->Arg(8);

void BM_Digirth(benchmark::State& state) {
    const auto d = sparse_sample(static_cast<std::size_t>(state.range(0)), 5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(digirth(d));
    state.counters["n"] = static_cast<double>(d.order());
}
BENCHMARK(BM_Digirth)->Arg(100)->Arg(1000);

void BM_ArrowCycles(benchmark::State& state) {
    const auto d = random_tournament(static_cast<std::size_t>(state.range(0)), 11);
    std::vector<Digraph> cycles;
    for (std::size_t len = 3; len <= 5; ++len) cycles.push_back(directed_cycle(len));
    for (auto _ : state) benchmark::DoNotOptimize(arrows_any(d, cycles, 2).holds);
}
BENCHMARK(BM_ArrowCycles)->Arg(7)->Arg(9);

void BM_EmbedCycle(benchmark::State& state) {
    const auto d = sparse_sample(200, 4, 5);
    const auto c = directed_cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_embedding(c, d));
}
BENCHMARK(BM_EmbedCycle)->Arg(5)->Arg(6);

void BM_DchrExhaustive(benchmark::State& state) {
    const auto g = complete_graph(static_cast<std::size_t>(state.range(0)));
    DchrOptions o;
    o.mode = DchrMode::Exhaustive;
    for (auto _ : state) benchmark::DoNotOptimize(dchr(g, o).value);
}
BENCHMARK(BM_DchrExhaustive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CycleAmalgamate(benchmark::State& state) {
    const auto base = directed_cycle(8);
    const std::vector<Vertex> root = {0, 1};
    const auto copies = static_cast<std::size_t>(state.range(0));
    const auto fam = make_twin_family(base, root, copies);
    std::vector<Label> reps;
    for (std::size_t j = 0; j < copies; ++j) reps.push_back(fam.psi(0, j, 2));
    for (auto _ : state) benchmark::DoNotOptimize(cycle_amalgamate(fam, reps, 6).digraph.order());
}
BENCHMARK(BM_CycleAmalgamate)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
