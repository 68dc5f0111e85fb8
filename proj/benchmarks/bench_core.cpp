#include "svid/centrality.hpp"
#include "svid/generators.hpp"
#include "svid/immunization.hpp"
#include "svid/shapley.hpp"
#include "svid/sir.hpp"

#include <benchmark/benchmark.h>

namespace {

svid::Graph ba(std::int64_t n) { return svid::barabasi_albert(static_cast<std::size_t>(n), 2, 1); }

void BM_SvidScores(benchmark::State& state) {
    const auto g = ba(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(svid::svid_scores(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SvidScores)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_Betweenness(benchmark::State& state) {
    const auto g = ba(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(svid::betweenness_scores(g));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_FullOrdering(benchmark::State& state) {
    const auto g = ba(2000);
    svid::StrategyConfig cfg;
    cfg.method = static_cast<svid::CentralityMethod>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(svid::full_ordering(g, cfg));
    state.SetLabel(std::string(svid::method_label(cfg.method)));
}
BENCHMARK(BM_FullOrdering)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SirEnsemble(benchmark::State& state) {
    const auto g = svid::erdos_renyi(1000, 2000, 1);
    svid::SirParams p;
    p.runs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(svid::sir_ensemble(g, svid::NodeSet(1000), p));
}
BENCHMARK(BM_SirEnsemble)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
