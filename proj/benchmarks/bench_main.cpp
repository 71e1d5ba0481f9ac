#include <benchmark/benchmark.h>

#include "qhaar/characters.hpp"

namespace {

using namespace qhaar;

void BM_scalar_mul(benchmark::State& state) {
  Scalar a = Scalar::parse("(1 + 2*p + p^3)/(1 - p^5)");
  Scalar b = q_int(4) * q_int(-3);
  for (auto _ : state) {
    Scalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_scalar_mul);

void BM_scalar_add_reduce(benchmark::State& state) {
  Scalar a = Scalar::parse("(1 + p^2)/(1 - p^3)");
  Scalar b = Scalar::parse("(2 - p)/(1 + p^4)");
  for (auto _ : state) {
    Scalar c = a + b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_scalar_add_reduce);

void BM_idempotent_n4(benchmark::State& state) {
  Partition lam({2, 1, 1});
  auto tabs = standard_tableaux(lam);
  for (auto _ : state) {
    HeckeElement e = dipper_james_idempotent(tabs.front());
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_idempotent_n4);

void BM_matrix_mul_27(benchmark::State& state) {
  HeckeSymmetry sym = build_manin_super(2, 1);
  SMatrix r1 = embed(sym.R, 1, 3, 3);
  SMatrix r2 = embed(sym.R, 2, 3, 3);
  for (auto _ : state) {
    SMatrix m = r1 * r2;
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_matrix_mul_27);

void BM_integral_tensor_n2(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    HeckeSymmetry sym = build_manin_super(1, 1);  // fresh cache each round
    state.ResumeTiming();
    const IntegralTensor& t = integral_tensor(sym, 2);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_integral_tensor_n2);

void BM_integrate_monomial(benchmark::State& state) {
  HeckeSymmetry sym = build_manin_super(1, 1);
  integral_tensor(sym, 2);  // warm cache
  Monomial m{{1, 2}, {1, 2}, {2, 1}, {2, 1}};
  for (auto _ : state) {
    Scalar v = integrate_monomial(sym, m);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_integrate_monomial);

void BM_hciz_rhs_n2(benchmark::State& state) {
  HeckeSymmetry sym = build_manin_super(1, 1);
  KPoint m{{Scalar(2), Scalar(3)}};
  KPoint n{{Scalar(5), Scalar(7)}};
  hciz_rhs(sym, m, n, 2);  // warm caches
  for (auto _ : state) {
    Scalar v = hciz_rhs(sym, m, n, 2);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_hciz_rhs_n2);

}  // namespace

BENCHMARK_MAIN();
