// Serial reference vs OpenMP kernel for the hot paths.
// Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "agg/crisp.hpp"
#include "agg/finder.hpp"
#include "agg/fuzzy.hpp"
#include "agg/gamma_magma.hpp"
#include "agg/io.hpp"
#include "agg/rng.hpp"
#include "agg/theorems.hpp"

using namespace agg;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

GammaMagma random_magma(std::size_t n, std::size_t k, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Element> cells(k * n * n);
  for (auto& c : cells) c = static_cast<Element>(rng.below(n));
  return GammaMagma(n, default_labels(k), cells);
}

FuzzySubset random_fuzzy(std::size_t n, std::uint64_t den, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<std::uint64_t> num(n);
  for (auto& v : num) v = rng.below(den + 1);
  return FuzzySubset(den, std::move(num));
}

GammaMagma ir5() { return io::load_structure(AGG_CORPUS_DIR "/ir5.json"); }

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto m = random_magma(16, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_ideals(m, IdealKind::bi, exec_of(state)));
  }
}
BENCHMARK(BM_EnumerateIdeals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GammaProduct(benchmark::State& state) {
  const auto m = random_magma(200, 3, 5);
  const auto f = random_fuzzy(200, 12, 6);
  const auto g = random_fuzzy(200, 12, 7);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_product(m, f, g, exec_of(state)));
}
BENCHMARK(BM_GammaProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_EnumerateModels(benchmark::State& state) {
  SearchSpec spec;
  spec.order = 3;
  spec.gamma = 2;
  spec.laws = {Law::left_invertive};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_models(spec, exec_of(state)));
}
BENCHMARK(BM_EnumerateModels)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto m = ir5();
  VerifyOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(m, "grand_equiv", Lattice(3), Mode::exhaustive(), opt));
  }
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FuzzyTwoSided(benchmark::State& state) {
  const auto m = ir5();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fuzzy_two_sided_ideals(m, Lattice(4), kDefaultTupleBudget, exec_of(state)));
  }
}
BENCHMARK(BM_FuzzyTwoSided)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
