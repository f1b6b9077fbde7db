#include <benchmark/benchmark.h>

#include <random>

#include "wrideal/covernum.hpp"
#include "wrideal/presentations.hpp"

using namespace wrideal;

namespace {

PointSet random_points(std::size_t n, Nat side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Nat> d(0, side - 1);
  PointSet s;
  while (s.size() < n) s.insert({d(rng), d(rng)});
  return s;
}

void BM_SecondTypeCover(benchmark::State& state) {
  const auto a = random_points(static_cast<std::size_t>(state.range(0)), 4 * static_cast<Nat>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(second_type_cover_number(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SecondTypeCover)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_PhiStructured(benchmark::State& state, IdealPresentation ideal) {
  const auto a = random_points(static_cast<std::size_t>(state.range(0)), 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(phi(ideal, a).value);
}
BENCHMARK_CAPTURE(BM_PhiStructured, wr, IdealPresentation::wr())->DenseRange(4, 12, 4);
BENCHMARK_CAPTURE(BM_PhiStructured, ed, IdealPresentation::ed())->DenseRange(4, 12, 4);
BENCHMARK_CAPTURE(BM_PhiStructured, edup, IdealPresentation::ed_up())->DenseRange(4, 12, 4);

void BM_BruteForce(benchmark::State& state) {
  const auto a = random_points(static_cast<std::size_t>(state.range(0)), 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_cover(a, CoverUniverse::wr()).cost());
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 12, 4);

}  // namespace
