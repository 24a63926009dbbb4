#include <benchmark/benchmark.h>

#include "qstx/program.hpp"
#include "qstx/shift.hpp"
#include "qstx/tensor.hpp"
#include "qstx/transfer.hpp"
#include "qstx/walk.hpp"

using qstx::lattice::LatticeSize;

static void BM_ShiftRootSpectral(benchmark::State& state) {
  const LatticeSize n(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(qstx::lattice::shift_root_spectral(n, 0.37));
}
BENCHMARK(BM_ShiftRootSpectral)->Arg(16)->Arg(64)->Arg(256);

static void BM_ShiftRootClosed(benchmark::State& state) {
  const LatticeSize n(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(qstx::lattice::shift_root_closed(n, 0.37));
}
BENCHMARK(BM_ShiftRootClosed)->Arg(16)->Arg(64)->Arg(256);

static void BM_MatExpHermitian(benchmark::State& state) {
  const LatticeSize n(static_cast<int>(state.range(0)));
  const qstx::ComplexMatrix h = qstx::lattice::shift_hamiltonian_spectral(n);
  for (auto _ : state) benchmark::DoNotOptimize(qstx::mat_exp_i(h, 1.7));
}
BENCHMARK(BM_MatExpHermitian)->Arg(16)->Arg(64)->Arg(128);

static void BM_WalkEvolve(benchmark::State& state) {
  const LatticeSize n(64);
  const qstx::walk::CoinSchedule schedule(
      {qstx::walk::make_coin(qstx::walk::CoinKind::hadamard_y)});
  const auto initial = qstx::walk::initial_walker(n, 0, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qstx::walk::walk_evolve(n, schedule, state.range(0), initial));
}
BENCHMARK(BM_WalkEvolve)->Arg(50)->Arg(200);

static void BM_TransferFidelity(benchmark::State& state) {
  const LatticeSize n(static_cast<int>(state.range(0)));
  const qstx::ComplexMatrix h = qstx::pst::pst_hamiltonian(n, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qstx::pst::transfer_fidelity(h, 3.14159, 0, n.value() - 1));
}
BENCHMARK(BM_TransferFidelity)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
