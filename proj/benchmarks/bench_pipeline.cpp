#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "ndi/ndi.hpp"

namespace {

ndi::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  std::vector<ndi::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) edges.emplace_back(i - 1, i);
    for (std::size_t j = i + 2; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  }
  return ndi::Graph(std::move(labels), edges);
}

ndi::Graph karate() {
  return ndi::read_edge_list(std::filesystem::path(NDI_BENCH_DATA_DIR) / "karate.txt").graph;
}

void BM_Betweenness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 8.0 / static_cast<double>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ndi::betweenness_centrality(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_Jacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  ndi::SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, u(rng));
  for (auto _ : state) benchmark::DoNotOptimize(ndi::jacobi_eigen(a));
}
BENCHMARK(BM_Jacobi)->Arg(4)->Arg(16)->Arg(64);

void BM_KaratePipeline(benchmark::State& state) {
  const auto g = karate();
  for (auto _ : state) benchmark::DoNotOptimize(ndi::compute_ndi(g));
}
BENCHMARK(BM_KaratePipeline);

void BM_KarateNsi(benchmark::State& state) {
  const auto g = karate();
  ndi::NsiOptions opts;
  opts.method = state.range(0) ? ndi::ThresholdMethod::binary_search : ndi::ThresholdMethod::mst_bottleneck;
  for (auto _ : state) benchmark::DoNotOptimize(ndi::compute_nsi(g, opts));
}
BENCHMARK(BM_KarateNsi)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
