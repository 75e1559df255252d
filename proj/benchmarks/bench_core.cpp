#include "lrdipole/lrdipole.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace lrdipole;

namespace {

const OscillatorParams kParams{1.0, 1.0, 1.3, 0.3, 0.2, 1.0, 1.0};

void BM_ClosedFormEta(benchmark::State& state)
{
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_eta(kParams, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_ClosedFormEta);

void BM_NumericEta(benchmark::State& state)
{
  const std::vector<double> grid = uniform_grid(static_cast<double>(state.range(0)), 0.1);
  SolverOptions options;
  options.path = EtaPath::Numeric;
  for (auto _ : state)
    benchmark::DoNotOptimize(eta_on_grid(kParams, DriveAxis::X, grid, options));
}
BENCHMARK(BM_NumericEta)->Arg(10)->Arg(100);

void BM_AccumulatePhases(benchmark::State& state)
{
  const std::vector<double> grid = uniform_grid(50.0, 0.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(accumulate_phases(kParams, DriveAxis::X, 0, grid));
}
BENCHMARK(BM_AccumulatePhases)->Unit(benchmark::kMillisecond);

void BM_DisplacementApply(benchmark::State& state)
{
  const FockVector vacuum = FockVector::basis(state.range(0), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(displacement_apply(cplx(0.3, -0.2), vacuum));
}
BENCHMARK(BM_DisplacementApply)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

// 100 oracle steps per iteration.
void BM_OracleSteps(benchmark::State& state)
{
  const FockVector vacuum = FockVector::basis(state.range(0), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(propagate_oracle(kParams, DriveAxis::X, vacuum, 0.1, 1e-3));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_OracleSteps)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LiouvilleResidual(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(liouville_residual(kParams, DriveAxis::X, 3.0, 64));
}
BENCHMARK(BM_LiouvilleResidual)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
