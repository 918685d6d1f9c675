#include <benchmark/benchmark.h>

#include <random>

#include "crosscomp/harness.hpp"
#include "crosscomp/io.hpp"
#include "crosscomp/pipeline.hpp"

using namespace crosscomp;

namespace {

std::vector<AnyInstance> clique_batch(int t, int n, int ell) {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.5);
    std::vector<AnyInstance> out;
    for (int i = 0; i < t; ++i) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        out.push_back(BudgetedInstance{Problem::Clique, g, ell, std::nullopt});
    }
    return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

}  // namespace

static void BM_ComposeCliqueVc(benchmark::State& state) {
    auto batch = clique_batch(static_cast<int>(state.range(0)), 4, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(Construction::CliqueVc, batch));
}
BENCHMARK(BM_ComposeCliqueVc)->Arg(2)->Arg(8)->Arg(32);

static void BM_DecideCliqueVc(benchmark::State& state) {
    auto out = compose(Construction::CliqueVc, clique_batch(4, 4, 4));
    SolverLimits limits{160, 40, 64, 24};
    for (auto _ : state)
        benchmark::DoNotOptimize(decide(out.instance, limits));
}
BENCHMARK(BM_DecideCliqueVc);

static void BM_DecideFvsDc(benchmark::State& state) {
    Graph e(2);
    e.add_edge(0, 1);
    const std::int64_t ell = state.range(0);
    std::vector<AnyInstance> batch(2, BudgetedInstance{Problem::IndependentSet, e, ell, std::nullopt});
    auto out = compose(Construction::FvsDc, batch);
    for (auto _ : state)
        benchmark::DoNotOptimize(decide(out.instance));
}
// 1 is a YES batch, 2 a NO batch.
BENCHMARK(BM_DecideFvsDc)->Arg(1)->Arg(2);

static void BM_MinFvs(benchmark::State& state) {
    std::mt19937_64 rng(3);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_fvs_size(g));
}
BENCHMARK(BM_MinFvs)->Arg(12)->Arg(20)->Arg(28);

static void BM_ChromaticTsdBatch(benchmark::State& state) {
    std::mt19937_64 rng(5);
    auto batch = random_tsd_batch(rng);
    auto out = compose(Construction::ChromVc, batch);
    for (auto _ : state)
        benchmark::DoNotOptimize(decide(out.instance));
}
BENCHMARK(BM_ChromaticTsdBatch);

static void BM_Distillation(benchmark::State& state) {
    std::mt19937_64 rng(9);
    auto batch = random_cnf_batch(rng);
    PipelineConfig cfg;
    cfg.kernel_stage = state.range(0) ? KernelStage::TrivialOracle : KernelStage::Identity;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_distillation(batch, cfg));
}
BENCHMARK(BM_Distillation)->Arg(0)->Arg(1);

static void BM_GraphFileRoundTrip(benchmark::State& state) {
    Graph e(2);
    e.add_edge(0, 1);
    std::vector<AnyInstance> batch(2, BudgetedInstance{Problem::IndependentSet, e, 1, std::nullopt});
    const std::string bytes = write_graph_file(compose(Construction::FvsDc, batch).instance);
    for (auto _ : state)
        benchmark::DoNotOptimize(write_graph_file(parse_graph_file(bytes)));
}
BENCHMARK(BM_GraphFileRoundTrip);
BENCHMARK_MAIN();
