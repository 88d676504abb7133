// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "intangle/census.hpp"
#include "intangle/kernels.hpp"
#include "intangle/lattice.hpp"
#include "intangle/two_box.hpp"

using namespace intangle;

namespace {

const char* const kSpecs[] = {"symmetric:4", "dihedral:12", "cyclic:2*symmetric:4"};

GroupPtr group_arg(const benchmark::State& state) { return parse_group_spec(kSpecs[state.range(0)]); }

std::vector<Rational> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
  return v;
}

void BM_convolve_serial(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto x = random_vector(g->order(), 1), y = random_vector(g->order(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_serial(*g, x, y));
}

void BM_convolve_parallel(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto x = random_vector(g->order(), 1), y = random_vector(g->order(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(*g, x, y));
}

TwoBoxElement random_element(const GroupPtr& g, std::uint64_t seed) {
  std::vector<QuadNumber> v;
  for (const auto& r : random_vector(g->order(), seed)) v.emplace_back(r);
  return TwoBoxElement(g, Side::Pointwise, std::move(v));
}

void BM_coproduct_serial(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto x = random_element(g, 3), y = random_element(g, 4);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct_serial(x, y));
}

void BM_coproduct_parallel(benchmark::State& state) {
  const auto g = group_arg(state);
  const auto x = random_element(g, 3), y = random_element(g, 4);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(x, y));
}

void BM_enumerate_serial(benchmark::State& state) {
  const auto base = Subgroup::trivial(group_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups_serial(base));
}

void BM_enumerate_parallel(benchmark::State& state) {
  const auto base = Subgroup::trivial(group_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(base));
}

void BM_census_serial(benchmark::State& state) {
  const auto base = Subgroup::trivial(group_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(base));
}

void BM_census_parallel(benchmark::State& state) {
  const auto base = Subgroup::trivial(group_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(census(base));
}

}  // namespace

BENCHMARK(BM_convolve_serial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_convolve_parallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_coproduct_serial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_coproduct_parallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_enumerate_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_serial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
