#include <benchmark/benchmark.h>

#include "qp/baseline.hpp"
#include "qp/closed_forms.hpp"
#include "qp/kernel.hpp"

namespace {

qp::PowerSeries dense(int order) {
  std::vector<qp::Rational> c;
  for (int i = 0; i <= order; ++i) c.emplace_back(i % 5 - 2, i % 3 + 1);
  c[0] = 1;
  return qp::PowerSeries(qp::Var::g, std::move(c));
}

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qp::PowerSeries a = dense(n), b = dense(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Revert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qp::PowerSeries s = dense(n) - qp::Rational(1);
  for (auto _ : state) benchmark::DoNotOptimize(qp::revert(s, qp::Var::g));
}
BENCHMARK(BM_Revert)->RangeMultiplier(2)->Range(8, 32);

void BM_RFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qp::solve_R_family(32, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RFamily)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SolvePhi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qp::solve_phi(n, n));
}
BENCHMARK(BM_SolvePhi)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_LagrangeH4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qp::lagrange_h4(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LagrangeH4)->Arg(12)->Arg(24);

void BM_ClosedTwoPoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qp::closed_two_point(10, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosedTwoPoint)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
