#include <benchmark/benchmark.h>

#include "kahlercalc/batyrev.hpp"
#include "kahlercalc/class_expr.hpp"
#include "kahlercalc/identities.hpp"
#include "kahlercalc/tensor.hpp"

using namespace kahlercalc;

namespace {

void BM_ScanObstruction(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_min_n(1, 1, n_max));
  }
}
BENCHMARK(BM_ScanObstruction)->Arg(50)->Arg(150)->Arg(500);

void BM_ClosedFormInvariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BigRational alpha(BigInt(3), BigInt(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariants_closed_form(n, alpha, 2));
  }
}
BENCHMARK(BM_ClosedFormInvariants)->Arg(4)->Arg(32)->Arg(256);

void BM_RingChernSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassExprPtr expr = parse_class_expr("c1^2 * W^(n-2)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eval_class_expr(*expr, n, 1, 1).top_evaluate());
  }
}
BENCHMARK(BM_RingChernSquare)->Arg(4)->Arg(16)->Arg(64);

void BM_ExpressionParse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_class_expr("(2*L + 3/7*H)^2 * c2 * W^(n-4)"));
  }
}
BENCHMARK(BM_ExpressionParse);

void BM_TracelessPartNorm(benchmark::State& state) {
  const TensorExpr paired =
      build_P("i", "j", "k", "l") * build_P("j", "i", "l", "k");
  for (auto _ : state) {
    benchmark::DoNotOptimize(contract(paired));
  }
}
BENCHMARK(BM_TracelessPartNorm);

void BM_DensityDerivations(benchmark::State& state) {
  const NormRules rules = rules_from_tensor_verification();
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_combination(rules));
    benchmark::DoNotOptimize(derive_csck_difference_density(rules));
  }
}
BENCHMARK(BM_DensityDerivations);

}  // namespace

BENCHMARK_MAIN();
