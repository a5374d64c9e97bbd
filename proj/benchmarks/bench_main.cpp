#include <benchmark/benchmark.h>

#include "quiverk/groth.hpp"
#include "quiverk/kclass.hpp"
#include "quiverk/residues.hpp"
#include "quiverk/series.hpp"

namespace {

using namespace quiverk;

Quiver a2() { return Quiver(2, {{0, 1}}); }

OrbitVector a2_m111() {
  return OrbitVector::from_entries({{{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
}

void bm_a2_kclass(benchmark::State& state) {
  const Quiver q = a2();
  const OrbitVector m = a2_m111();
  for (auto _ : state) benchmark::DoNotOptimize(kclass(q, m));
}
BENCHMARK(bm_a2_kclass)->Unit(benchmark::kMillisecond);

void bm_gpoly_21(benchmark::State& state) {
  // Bypass the memo cache by varying the negative-alphabet rank.
  const IntegerSequence lam{2, 1};
  for (auto _ : state) {
    state.PauseTiming();
    static int tick = 0;
    std::vector<Variable> a, b;
    for (int i = 1; i <= 3; ++i) a.push_back(Variable::letter('a', i));
    for (int i = 1; i <= 3; ++i) b.push_back(Variable::letter('b', 100 + (tick++ % 1000) * 3 + i));
    state.ResumeTiming();
    benchmark::DoNotOptimize(g_poly_in(lam, a, b));
  }
}
BENCHMARK(bm_gpoly_21)->Unit(benchmark::kMillisecond);

void bm_series_expand(benchmark::State& state) {
  const Variable x = Variable::letter('x'), y = Variable::letter('y');
  FactorProduct f;
  f.div_one_minus(1, Monomial::variable(x));
  f.div_one_minus(1, Monomial::variable(x) * Monomial::variable(y, -1));
  f.mul_one_minus(1, Monomial::variable(y), 2);
  const ExpansionDomain dom({x, y});
  const ProductSum ps{f};
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(ps, dom, 24));
}
BENCHMARK(bm_series_expand)->Unit(benchmark::kMillisecond);

void bm_localization(benchmark::State& state) {
  std::vector<Variable> roots, sig, om;
  for (int i = 1; i <= 6; ++i) roots.push_back(Variable::letter('a', i));
  for (int i = 1; i <= 3; ++i) sig.push_back(Variable::letter('s', i));
  for (int i = 1; i <= 3; ++i) om.push_back(Variable::letter('w', i));
  const FactoredRational one(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(localization_pushforward(one, sig, om, roots));
}
BENCHMARK(bm_localization)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
