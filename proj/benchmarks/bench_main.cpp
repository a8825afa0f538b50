#include <benchmark/benchmark.h>

#include "multichrome/analytic.hpp"
#include "multichrome/diffusion.hpp"
#include "multichrome/ensemble.hpp"
#include "multichrome/generators.hpp"
#include "multichrome/graph.hpp"

using namespace multichrome;

namespace {

generated_network community_network(node_t size) {
  dense_frontier_spec d;
  d.a_size = size * 2 / 5;
  d.b_size = size - d.a_size;
  d.intra_a = 8.0 / d.a_size;
  d.intra_b = 8.0 / d.b_size;
  d.inter = 8.0 / d.a_size;
  return generate({"bench", d, 1});
}

void bm_simulate(benchmark::State& state) {
  const auto net = community_network(static_cast<node_t>(state.range(0)));
  sim_params params;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    params.seed = seed++;
    benchmark::DoNotOptimize(simulate(net.g, net.labels, params).converts);
  }
  state.SetItemsProcessed(state.iterations() * params.steps);
}
BENCHMARK(bm_simulate)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);

void bm_betweenness(benchmark::State& state) {
  erdos_renyi_spec er;
  er.n = static_cast<node_t>(state.range(0));
  er.p = 8.0 / er.n;
  const auto net = generate({"bench", er, 1});
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(net.g).data());
}
BENCHMARK(bm_betweenness)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void bm_betweenness_sampled(benchmark::State& state) {
  erdos_renyi_spec er;
  er.n = 20000;
  er.p = 8.0 / er.n;
  const auto net = generate({"bench", er, 1});
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(net.g, node_t{64}, 1).data());
}
BENCHMARK(bm_betweenness_sampled)->Unit(benchmark::kMillisecond);

void bm_branching_oracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(branching_oracle(0.004, 0.008, 50, static_cast<std::uint64_t>(state.range(0)), 1, 1).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_branching_oracle)->Arg(10000)->Unit(benchmark::kMillisecond);

void bm_generate(benchmark::State& state) {
  const auto specs = mixed_ensemble(8, 3);
  for (auto _ : state)
    for (const auto& s : specs) benchmark::DoNotOptimize(generate(s).g.edge_count());
}
BENCHMARK(bm_generate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
