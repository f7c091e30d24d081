#include <benchmark/benchmark.h>

#include "hecke/cellular/cellular.hpp"
#include "hecke/decomp/decomp.hpp"

using namespace hecke;

namespace {

/// H_{2,n} at q = -1, Q = (1, -1).
Params special(int n) { return make_system(2, 2, 2, n, 1, {0}).special_params(); }

void BM_AlgebraTables(benchmark::State& state) {
  Params P = special(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Algebra A(P);
    benchmark::DoNotOptimize(A.dim());
  }
}
BENCHMARK(BM_AlgebraTables)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  Algebra A(special(4));
  Element a = A.mul(A.mul(A.T(0), A.T(1)), A.L(3));
  Element b = A.mul(A.T(2), A.mul(A.T(3), A.L(2)));
  for (auto _ : state) benchmark::DoNotOptimize(A.mul(a, b));
}
BENCHMARK(BM_Multiply);

void BM_SpechtModules(benchmark::State& state) {
  Algebra A(special(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    Cellular C(A);
    int total = 0;
    for (const auto& lam : C.shapes()) total += C.simple(lam).rank;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_SpechtModules)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_DecompDirect(benchmark::State& state) {
  ModularSystem sys = make_system(2, 2, 2, 3, 1, {0});
  for (auto _ : state) benchmark::DoNotOptimize(simples_and_decomp_hrpn_direct(sys).matrix.entries.size());
}
BENCHMARK(BM_DecompDirect)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_DecompReduced(benchmark::State& state) {
  ModularSystem sys = make_system(2, 2, 2, 3, 1, {0});
  for (auto _ : state) benchmark::DoNotOptimize(decomp_hrpn_reduced(sys).matrix.entries.size());
}
BENCHMARK(BM_DecompReduced)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_CharacterSolver(benchmark::State& state) {
  Field f = cyclotomic_field(1);
  const int k = static_cast<int>(state.range(0));
  std::vector<std::vector<Scalar>> traces(k, std::vector<Scalar>(2 * k, Scalar::from_int(f, 0)));
  std::vector<int> dims(k, 1);
  std::vector<Scalar> target(2 * k, Scalar::from_int(f, 0));
  for (int a = 0; a < k; ++a) {
    for (int w = a; w < 2 * k; ++w) traces[a][w] = Scalar::from_int(f, 1 + (a * w) % 3);
    for (int w = 0; w < 2 * k; ++w) target[w] = target[w] + traces[a][w];
  }
  for (auto _ : state) {
    CharacterSolver solver(traces, dims);
    benchmark::DoNotOptimize(solver.multiplicities(target, k));
  }
}
BENCHMARK(BM_CharacterSolver)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
BENCHMARK_MAIN();
