#include "divlat/divisorial.hpp"
#include "divlat/localization.hpp"
#include "divlat/numerical_semigroup.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace divlat;

namespace {

SampleFrame small_frame() {
  SampleFrame f;
  f.max_exp = 10;
  f.max_int = 60;
  f.max_num = 4;
  f.max_den = 3;
  f.max_frob = 5;
  f.max_scale = 2;
  f.max_deg = 5;
  return f;
}

BackendId backend_arg(const benchmark::State& state) { return kAllBackends[static_cast<std::size_t>(state.range(0))]; }

void set_label(benchmark::State& state) { state.SetLabel(std::string(backend_name(backend_arg(state)))); }

// All pairwise residuals over the default frame (thinned to 40 elements).
void BM_Residual(benchmark::State& state) {
  const auto& L = lattice(backend_arg(state));
  const auto xs = thin_for_arity(L.enumerate(SampleFrame{}), 1, 40);
  for (auto _ : state)
    for (const auto& y : xs)
      for (const auto& x : xs) benchmark::DoNotOptimize(L.residual(y, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size() * xs.size()));
  set_label(state);
}
BENCHMARK(BM_Residual)->DenseRange(0, 4);

void BM_Mul(benchmark::State& state) {
  const auto& L = lattice(backend_arg(state));
  const auto xs = thin_for_arity(L.enumerate(SampleFrame{}), 1, 40);
  for (auto _ : state)
    for (const auto& y : xs)
      for (const auto& x : xs) benchmark::DoNotOptimize(L.mul(y, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size() * xs.size()));
  set_label(state);
}
BENCHMARK(BM_Mul)->DenseRange(0, 4);

// Closure of every frame element with a fresh engine each iteration.
void BM_ClosureFrame(benchmark::State& state) {
  const auto& L = lattice(backend_arg(state));
  const SampleFrame f;
  for (auto _ : state) {
    ClosureEngine engine(L, f);
    for (const auto& a : engine.elements())
      if (a != L.bottom()) benchmark::DoNotOptimize(engine.closure(a));
  }
  set_label(state);
}
BENCHMARK(BM_ClosureFrame)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_AxiomsSmall(benchmark::State& state) {
  const auto& L = lattice(backend_arg(state));
  const auto f = small_frame();
  for (auto _ : state) benchmark::DoNotOptimize(axioms_suite(L, f));
  set_label(state);
}
BENCHMARK(BM_AxiomsSmall)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_LocalizationRules(benchmark::State& state) {
  const auto& L = lattice(BackendId::DedekindInt);
  const auto p = L.parse("2");
  for (auto _ : state) benchmark::DoNotOptimize(check_localization_rules(L, SampleFrame{}, p));
}
BENCHMARK(BM_LocalizationRules)->Unit(benchmark::kMillisecond);

void BM_SemigroupFromGenerators(benchmark::State& state) {
  const std::vector<std::uint64_t> gens{static_cast<std::uint64_t>(state.range(0)),
                                        static_cast<std::uint64_t>(state.range(0) + 1),
                                        static_cast<std::uint64_t>(2 * state.range(0) + 3)};
  for (auto _ : state) benchmark::DoNotOptimize(NumericalSemigroup::from_generators(gens));
}
BENCHMARK(BM_SemigroupFromGenerators)->RangeMultiplier(2)->Range(4, 64);

void BM_SemigroupsUpToFrobenius(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(NumericalSemigroup::with_frobenius_at_most(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SemigroupsUpToFrobenius)->DenseRange(9, 15, 3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
