#include <benchmark/benchmark.h>

#include "wrideal/embedding.hpp"
#include "wrideal/reductions.hpp"
#include "wrideal/staged_sigma.hpp"

using namespace wrideal;

namespace {

void BM_InterleavingRoundTrip(benchmark::State& state) {
  const auto side = static_cast<Nat>(state.range(0));
  for (auto _ : state) {
    Nat acc = 0;
    for (Nat c = 0; c < side; ++c) {
      for (Nat r = 0; r < side; ++r) acc += prop45_invert(prop45_apply({c, r})).row;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_InterleavingRoundTrip)->Arg(64)->Arg(256);

void BM_BlockEnumeration(benchmark::State& state) {
  const auto n = static_cast<Nat>(state.range(0));
  for (auto _ : state) {
    Nat acc = 0;
    for (Nat i = 0; i < n; ++i) acc += remark44_index(remark44_enumerate(i));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BlockEnumeration)->Arg(1 << 12)->Arg(1 << 16);

void BM_StagedSigmaBuild(benchmark::State& state) {
  const auto window = static_cast<Nat>(state.range(0));
  for (auto _ : state) {
    const StagedSigma s(pihat_map(), pihat_map(), window);
    benchmark::DoNotOptimize(s.stage_count());
  }
}
BENCHMARK(BM_StagedSigmaBuild)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_PartitionEmbedding(benchmark::State& state) {
  const auto window = static_cast<Nat>(state.range(0));
  const auto w = PartitionWitness::dyadic();
  for (auto _ : state) benchmark::DoNotOptimize(partition_to_embedding(w, window).sigma.at(window - 1));
}
BENCHMARK(BM_PartitionEmbedding)->Arg(64)->Arg(256);

}  // namespace
