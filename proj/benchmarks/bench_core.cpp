// Microbenchmarks for the dense kernels: STFT, frame operator assembly,
// hermitian eigensolve, and the per-signal localization norm.
#include <benchmark/benchmark.h>

#include "tfl/gabor.hpp"
#include "tfl/locop.hpp"
#include "tfl/modnorm.hpp"
#include "tfl/phase_space.hpp"
#include "tfl/rng.hpp"

using namespace tfl;

namespace {

Signal random_signal(Rng& rng, int n) {
  CVector v(n);
  for (int t = 0; t < n; ++t) v[t] = Complex(rng.next_gauss(), rng.next_gauss());
  return Signal(std::move(v));
}

RMatrix random_symbol(Rng& rng, int n) {
  RMatrix s(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) s(k, l) = rng.next_unit();
  return s;
}

void BM_Stft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Window g = gaussian_window(n);
  const Signal f = random_signal(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stft(g, f));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Stft)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_StftAdjoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Window g = gaussian_window(n);
  const TFMatrix F = stft(g, random_signal(rng, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stft_adjoint(g, F));
  }
}
BENCHMARK(BM_StftAdjoint)->RangeMultiplier(2)->Range(8, 64);

void BM_FrameOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Window g = gaussian_window(n);
  const Lattice lat = Lattice::separable(n, 2, 2);
  const WindowBundle bundle = WindowBundle::single(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_operator(bundle, lat));
  }
}
BENCHMARK(BM_FrameOperator)->RangeMultiplier(2)->Range(8, 64);

void BM_LocOpBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const Window g = gaussian_window(n);
  const RMatrix sigma = random_symbol(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(localization_operator(sigma, g));
  }
}
BENCHMARK(BM_LocOpBuild)->RangeMultiplier(2)->Range(8, 64);

void BM_SpectralDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const LocOp op = localization_operator(random_symbol(rng, n), gaussian_window(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_decomposition(op));
  }
}
BENCHMARK(BM_SpectralDecomposition)->RangeMultiplier(2)->Range(8, 64);

void BM_LocalizationNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  const Window g = gaussian_window(n);
  const Lattice lat = Lattice::separable(n, 2, 2);
  RMatrix sigma = RMatrix::Zero(n, n);
  const CellMap cells(lat);
  for (const PhasePoint& q : cells.cell_representatives()) sigma(q.k, q.l) = 1.0;
  const LocOp base = localization_operator(sigma, g);
  const Signal f = random_signal(rng, n);
  NormSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(localization_norm(f, base, cells, spec));
  }
}
BENCHMARK(BM_LocalizationNorm)->RangeMultiplier(2)->Range(8, 32);

void BM_JanssenRepresentation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Window g = gaussian_window(n);
  const Lattice lat = Lattice::separable(n, 2, 2);
  const WindowBundle bundle = WindowBundle::single(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(janssen_representation(bundle, bundle, lat));
  }
}
BENCHMARK(BM_JanssenRepresentation)->RangeMultiplier(2)->Range(8, 32);

}  // namespace

BENCHMARK_MAIN();
