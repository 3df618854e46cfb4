#include "rrosc/eigensolver.hpp"
#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/optimizer.hpp"

#include <benchmark/benchmark.h>

using namespace rrosc;

namespace {

HamiltonianSpec rotated_ho(int M) {
  return {10, HamiltonianForm::Rotated, BasisKind::HarmonicOscillator, M};
}

void BM_Assemble(benchmark::State& state) {
  const PrecisionContext ctx(30);
  const auto spec = rotated_ho(static_cast<int>(state.range(0)));
  const Real w = optimize_parameter(spec, ctx).alpha_opt;
  for (auto _ : state) benchmark::DoNotOptimize(assemble(spec, w, ctx));
}
BENCHMARK(BM_Assemble)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_KroneckerApply(benchmark::State& state) {
  const PrecisionContext ctx(30);
  const auto spec = rotated_ho(static_cast<int>(state.range(0)));
  const KroneckerHamiltonian h(spec, ctx.real(5L), ctx);
  std::vector<Real> v(h.dimension(), ctx.real(1L)), out(h.dimension(), ctx.real(0L));
  for (auto _ : state) {
    h.apply(v, out);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_KroneckerApply)->Arg(10)->Arg(20)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_JacobiAllEigenvalues(benchmark::State& state) {
  const PrecisionContext ctx(30);
  const auto spec = rotated_ho(static_cast<int>(state.range(0)));
  const SymmetricMatrix h = assemble(spec, ctx.real(5L), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(h, ctx));
}
BENCHMARK(BM_JacobiAllEigenvalues)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GroundEnergy(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  const auto spec = rotated_ho(static_cast<int>(state.range(0)));
  const Real w = optimize_parameter(spec, ctx).alpha_opt;
  for (auto _ : state) benchmark::DoNotOptimize(ground_energy(spec, w, ctx));
}
BENCHMARK(BM_GroundEnergy)
    ->Args({20, 30})
    ->Args({35, 30})
    ->Args({35, 60})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
