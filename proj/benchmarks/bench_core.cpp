#include <benchmark/benchmark.h>

#include "dgli/identities.hpp"
#include "dgli/models.hpp"

namespace {

using namespace dgli;

void BM_BernoulliTable(benchmark::State& state) {
  const auto max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    BernoulliTable table(max);
    benchmark::DoNotOptimize(table.at(max));
  }
}
BENCHMARK(BM_BernoulliTable)->Arg(30)->Arg(60);

void BM_VTable(benchmark::State& state) {
  const auto max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VTable table(max);
    benchmark::DoNotOptimize(table.at(max, max / 2));
  }
}
BENCHMARK(BM_VTable)->Arg(60)->Arg(120);

void BM_AdjointBracket(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto& xb = GradedAlphabet::xb();
  const int truncation = static_cast<int>(2 * n) + 2;
  const Element beta = Element::generator(xb, xb.index_of("β"), truncation);
  const Element lhs = ad_pow(xb.index_of("x"), n, beta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket(lhs, lhs));
  }
}
BENCHMARK(BM_AdjointBracket)->Arg(5)->Arg(7);

void BM_ThetaComposition(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const int truncation = static_cast<int>(2 * p) + 2;
  const auto& xb = GradedAlphabet::xb();
  const Element x = Element::generator(xb, xb.index_of("x"), truncation);
  const Derivation tp = theta(p, truncation);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(tp, tp, x));
  }
}
BENCHMARK(BM_ThetaComposition)->Arg(5)->Arg(7);

void BM_MuRank(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto& xb = GradedAlphabet::xb();
  const int truncation = static_cast<int>(n) + 2;
  const Element beta = Element::generator(xb, xb.index_of("β"), truncation);
  const auto family = mu_family(n, beta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(family));
  }
}
BENCHMARK(BM_MuRank)->Arg(10)->Arg(14);

void BM_InductiveBuild(benchmark::State& state) {
  const auto max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inductive_build(max, static_cast<int>(max) + 2));
  }
}
BENCHMARK(BM_InductiveBuild)->Arg(8)->Arg(20);

void BM_GeometricDSquared(benchmark::State& state) {
  const auto max = static_cast<unsigned>(state.range(0));
  BernoulliTable table(max);
  const auto model =
      IntervalModel::geometric(table, max, static_cast<int>(max) + 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_squared_report(model));
  }
}
BENCHMARK(BM_GeometricDSquared)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
