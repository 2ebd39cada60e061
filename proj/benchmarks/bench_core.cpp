#include <benchmark/benchmark.h>

#include "smallworld/compare.hpp"
#include "smallworld/components.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/milgram.hpp"
#include "smallworld/random_model.hpp"
#include "smallworld/rng.hpp"

namespace sw = smallworld;

namespace {

sw::ErParams sparse_params(sw::NodeId n) {
  return {n, 4.0 / (static_cast<double>(n) - 1.0), 42};
}

const sw::UndirectedGraph& sparse_graph() {
  static sw::UndirectedGraph graph = sw::er_generate(sparse_params(100000));
  return graph;
}

}  // namespace

static void BM_ErGenerate(benchmark::State& state) {
  auto params = sparse_params(static_cast<sw::NodeId>(state.range(0)));
  for (auto _ : state) {
    sw::UndirectedGraph graph = sw::er_generate(params);
    benchmark::DoNotOptimize(graph.edge_count());
  }
}
BENCHMARK(BM_ErGenerate)->Arg(10000)->Arg(100000);

static void BM_AverageClustering(benchmark::State& state) {
  const auto& graph = sparse_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sw::average_clustering(graph, 1));
  }
}
BENCHMARK(BM_AverageClustering);

static void BM_DegreeAssortativity(benchmark::State& state) {
  const auto& graph = sparse_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sw::degree_assortativity(graph));
  }
}
BENCHMARK(BM_DegreeAssortativity);

static void BM_ConnectedComponents(benchmark::State& state) {
  const auto& graph = sparse_graph();
  for (auto _ : state) {
    sw::ComponentLabeling labeling = sw::connected_components(graph);
    benchmark::DoNotOptimize(labeling.count());
  }
}
BENCHMARK(BM_ConnectedComponents);

static void BM_ShortestPathQuery(benchmark::State& state) {
  const auto& graph = sparse_graph();
  sw::SplitMix64 rng(7);
  for (auto _ : state) {
    sw::NodeId s = static_cast<sw::NodeId>(
        sw::bounded(rng, graph.node_count()));
    sw::NodeId t = static_cast<sw::NodeId>(
        sw::bounded(rng, graph.node_count()));
    if (s == t) continue;
    benchmark::DoNotOptimize(sw::shortest_path_length(graph, s, t));
  }
}
BENCHMARK(BM_ShortestPathQuery);

static void BM_RunMilgram(benchmark::State& state) {
  const auto& graph = sparse_graph();
  sw::MilgramConfig config{static_cast<std::uint64_t>(state.range(0)), 1,
                           sw::PathMode::Undirected};
  for (auto _ : state) {
    sw::MilgramResult result = sw::run_milgram(graph, config, 1);
    benchmark::DoNotOptimize(result.successes);
  }
}
BENCHMARK(BM_RunMilgram)->Arg(1000);

static void BM_TopK(benchmark::State& state) {
  const auto& graph = sparse_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sw::top_k(graph, 10));
  }
}
BENCHMARK(BM_TopK);

BENCHMARK_MAIN();
