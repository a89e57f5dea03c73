// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "strata/braid_word.hpp"
#include "strata/config_loop.hpp"
#include "strata/kernels.hpp"

using namespace strata;

namespace {

std::vector<BraidWord> batch(std::size_t count, int k, int length) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> index(1, k - 1);
  std::vector<BraidWord> out;
  for (std::size_t w = 0; w < count; ++w) {
    BraidWord b(k);
    for (int t = 0; t < length; ++t) b.push_back({index(rng), (rng() & 1) ? 1 : -1});
    out.push_back(std::move(b));
  }
  return out;
}

void BM_NormalFormsSerial(benchmark::State& state) {
  const auto words = batch(static_cast<std::size_t>(state.range(0)), 6, 60);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::normal_forms_serial(words));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NormalFormsParallel(benchmark::State& state) {
  const auto words = batch(static_cast<std::size_t>(state.range(0)), 6, 60);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::normal_forms_parallel(words));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DeterminantsSerial(benchmark::State& state) {
  const auto loop = make_h_loop(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frame_determinants_serial(loop.frames(), 4));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DeterminantsParallel(benchmark::State& state) {
  const auto loop = make_h_loop(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frame_determinants_parallel(loop.frames(), 4));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SingularValuesSerial(benchmark::State& state) {
  const auto loop = make_gamma_loop(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frame_singular_values_serial(loop.frames()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SingularValuesParallel(benchmark::State& state) {
  const auto loop = make_gamma_loop(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frame_singular_values_parallel(loop.frames()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_NormalFormsSerial)->Arg(256)->Arg(2048);
BENCHMARK(BM_NormalFormsParallel)->Arg(256)->Arg(2048);
BENCHMARK(BM_DeterminantsSerial)->Arg(1024)->Arg(16384);
BENCHMARK(BM_DeterminantsParallel)->Arg(1024)->Arg(16384);
BENCHMARK(BM_SingularValuesSerial)->Arg(1024)->Arg(8192);
BENCHMARK(BM_SingularValuesParallel)->Arg(1024)->Arg(8192);

BENCHMARK_MAIN();
