#include <benchmark/benchmark.h>

#include "mk/suites.hpp"

namespace {

mk::KLabel rank_two(int l) { return mk::label_for(mk::satake_catalog(mk::Family::CI, 2), l); }

void BM_BuildPolynomialRankOne(benchmark::State& state) {
  mk::KLabel k = mk::label_for(mk::satake_catalog(mk::Family::AI1), 1);
  mk::Weight lam = {static_cast<int>(state.range(0))};
  for (auto _ : state) {
    mk::clear_operator_cache();
    benchmark::DoNotOptimize(mk::build_polynomial(k, lam));
  }
}
BENCHMARK(BM_BuildPolynomialRankOne)->Arg(4)->Arg(8)->Arg(12);

void BM_BuildPolynomialRankTwo(benchmark::State& state) {
  mk::KLabel k = rank_two(1);
  mk::Weight lam = {static_cast<int>(state.range(0)), 2};
  for (auto _ : state) {
    mk::clear_operator_cache();
    benchmark::DoNotOptimize(mk::build_polynomial(k, lam));
  }
}
BENCHMARK(BM_BuildPolynomialRankTwo)->Arg(2)->Arg(4)->Arg(6);

void BM_WeightExpansion(benchmark::State& state) {
  mk::KLabel k = rank_two(0);
  int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mk::expand(mk::koornwinder_weight(k), M));
}
BENCHMARK(BM_WeightExpansion)->Arg(10)->Arg(20)->Arg(40);

void BM_GramSchmidt(benchmark::State& state) {
  mk::KLabel k = mk::label_for(mk::satake_catalog(mk::Family::AIIIa, 1, 2), 0);
  for (auto _ : state) benchmark::DoNotOptimize(mk::build_polynomial_gs(k, {4}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GramSchmidt)->Arg(20)->Arg(40);

void BM_RankOneVerification(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mk::verify_rank1(mk::Rank1Kind::AIV, 3, l, mk::Q(1, 2)));
}
BENCHMARK(BM_RankOneVerification)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
