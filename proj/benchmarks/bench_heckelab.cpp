#include <benchmark/benchmark.h>

#include <random>

#include "heckelab/heckelab.hpp"

using namespace heckelab;

namespace {

void BM_BuildGroup(benchmark::State& state, const char* type, EnginePreference engine) {
  auto matrix = CoxeterMatrix::from_type(type);
  for (auto _ : state) {
    auto ctx = GroupContext::build(matrix, {.engine = engine});
    benchmark::DoNotOptimize(ctx.size());
  }
}
BENCHMARK_CAPTURE(BM_BuildGroup, A4_generic, "A:4", EnginePreference::Generic);
BENCHMARK_CAPTURE(BM_BuildGroup, A4_permutation, "A:4", EnginePreference::Permutation);
BENCHMARK_CAPTURE(BM_BuildGroup, B4_generic, "B:4", EnginePreference::Generic);
BENCHMARK_CAPTURE(BM_BuildGroup, B4_permutation, "B:4", EnginePreference::Permutation);
BENCHMARK_CAPTURE(BM_BuildGroup, D5_permutation, "D:5", EnginePreference::Permutation);
BENCHMARK_CAPTURE(BM_BuildGroup, F4_generic, "F:4", EnginePreference::Generic);
BENCHMARK_CAPTURE(BM_BuildGroup, H4_generic, "H:4", EnginePreference::Generic)->Unit(benchmark::kMillisecond);

void BM_AllKL(benchmark::State& state, const char* type) {
  auto ctx = GroupContext::build(CoxeterMatrix::from_type(type));
  HeckeAlgebra alg(ctx);
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    KLBasis kl(alg);
    compute_all_kl(kl, jobs);
    benchmark::DoNotOptimize(kl.kl_element(ctx.longest_element()).size());
  }
}
BENCHMARK_CAPTURE(BM_AllKL, A4, "A:4")->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AllKL, B4, "B:4")->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AllKL, H3, "H:3")->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AllProjective(benchmark::State& state, const char* type) {
  auto ctx = GroupContext::build(CoxeterMatrix::from_type(type));
  HeckeAlgebra alg(ctx);
  KLBasis kl(alg);
  compute_all_kl(kl);
  for (auto _ : state) {
    ProjectiveBasis proj(kl);
    compute_all_projective(proj);
    benchmark::DoNotOptimize(proj.proj_element(kIdentity).size());
  }
}
BENCHMARK_CAPTURE(BM_AllProjective, B3, "B:3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AllProjective, A4, "A:4")->Unit(benchmark::kMillisecond);

void BM_TiltingDuality(benchmark::State& state) {
  auto ctx = GroupContext::build(CoxeterMatrix::from_type("B:3"));
  HeckeAlgebra alg(ctx);
  KLBasis kl(alg);
  ProjectiveBasis proj(kl);
  compute_all_projective(proj);
  for (auto _ : state)
    for (ElementId x : ctx.enumerate()) benchmark::DoNotOptimize(proj.tilting_duality(x));
}
BENCHMARK(BM_TiltingDuality)->Unit(benchmark::kMillisecond);

void BM_LaurentMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> exponent(-20, 20), coeff(-1000, 1000);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int i = 0; i < state.range(0); ++i) p += LaurentPoly::monomial(coeff(rng), exponent(rng));
    return p;
  };
  LaurentPoly a = random_poly(), b = random_poly();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(16)->Arg(40);

void BM_HeckeMul(benchmark::State& state) {
  auto ctx = GroupContext::build(CoxeterMatrix::from_type("B:3"));
  HeckeAlgebra alg(ctx);
  KLBasis kl(alg);
  const HeckeElement& a = kl.kl_element(ElementId(20));
  const HeckeElement& b = kl.kl_element(ElementId(30));
  for (auto _ : state) benchmark::DoNotOptimize(alg.mul(a, b).size());
}
BENCHMARK(BM_HeckeMul);

}  // namespace

BENCHMARK_MAIN();
