#include <benchmark/benchmark.h>

#include "metacocycle/cocycle.hpp"

using namespace metacocycle;

namespace {

// (m, r) pairs indexed by state.range(0); mn = 2mr runs 2, 4, 6, 8, 12.
DoubledSpace space(long shape) {
  static const std::pair<std::size_t, std::size_t> shapes[] = {{1, 1}, {1, 2}, {3, 1}, {2, 2}, {3, 2}};
  const auto [m, r] = shapes[shape];
  std::vector<Rational> gram;
  for (std::size_t k = 1; k <= m; ++k) gram.emplace_back(static_cast<long>(k));
  return DoubledSpace(HermitianSpace::diagonal(gram, 3), SplitSkewHermitianSpace(r, 3));
}

void BM_HilbertSymbol(benchmark::State& state) {
  LocalContext ctx(7, 3);
  Rng rng(1);
  std::vector<Rational> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(draw_nonzero_rational(rng, 1000));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_symbol(xs[i % 256], xs[(i + 7) % 256], ctx));
    ++i;
  }
}
BENCHMARK(BM_HilbertSymbol);

void BM_WeilIndexQuadSpace(benchmark::State& state) {
  LocalContext ctx(5, 2);
  Rng rng(2);
  std::vector<Rational> diag;
  for (long i = 0; i < state.range(0); ++i) diag.push_back(draw_nonzero_rational(rng, 50));
  QuadSpaceF q(diag);
  for (auto _ : state) benchmark::DoNotOptimize(weil_index_quadspace(q, ctx));
}
BENCHMARK(BM_WeilIndexQuadSpace)->Arg(2)->Arg(8)->Arg(24);

void BM_GaussOracle(benchmark::State& state) {
  LocalContext ctx(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weil_index_gauss_oracle_stationary(21, ctx, ctx.eta_scale()));
}
BENCHMARK(BM_GaussOracle)->Unit(benchmark::kMillisecond);

void BM_BruhatUnitary(benchmark::State& state) {
  SplitSkewHermitianSpace w(static_cast<std::size_t>(state.range(0)), 3);
  Rng rng(3);
  SimilitudeElement h = random_unitary(w, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bruhat_decompose(h, w));
}
BENCHMARK(BM_BruhatUnitary)->Arg(1)->Arg(2)->Arg(3);

void BM_BruhatSymplectic(benchmark::State& state) {
  DoubledSpace d = space(state.range(0));
  Rng rng(4);
  GSpElement s = random_symplectic(d, rng, 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(bruhat_sp(s, d));
  state.SetLabel("mn=" + std::to_string(d.mn()));
}
BENCHMARK(BM_BruhatSymplectic)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_IotaV(benchmark::State& state) {
  DoubledSpace d = space(state.range(0));
  Rng rng(5);
  SimilitudeElement h = random_unitary(d.w(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(iota_V(h, d));
  state.SetLabel("mn=" + std::to_string(d.mn()));
}
BENCHMARK(BM_IotaV)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_RaoCocycle(benchmark::State& state) {
  DoubledSpace d = space(state.range(0));
  LocalContext ctx(7, 3);
  Rng rng(6);
  GSpElement a = random_symplectic(d, rng, 4, 6), b = random_symplectic(d, rng, 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(rao_cocycle(a, b, d, ctx));
  state.SetLabel("mn=" + std::to_string(d.mn()));
}
BENCHMARK(BM_RaoCocycle)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_BigCocycle(benchmark::State& state) {
  DoubledSpace d = space(state.range(0));
  LocalContext ctx(7, 3);
  Rng rng(7);
  GSpElement a = random_symplectic(d, rng, 4, 6) * d_big(5, d), b = random_symplectic(d, rng, 4, 6) * d_big(-2, d);
  for (auto _ : state) benchmark::DoNotOptimize(big_cocycle_C(a, b, d, ctx));
  state.SetLabel("mn=" + std::to_string(d.mn()));
}
BENCHMARK(BM_BigCocycle)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Beta(benchmark::State& state) {
  DoubledSpace d = space(state.range(0));
  LocalContext ctx(7, 3);
  CharacterChi chi(d.m(), ctx);
  Rng rng(8);
  SimilitudeElement h = random_unitary(d.w(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(beta_V_chi(h, d, chi, ctx));
}
BENCHMARK(BM_Beta)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_Calibration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(calibrate_leray());
}
BENCHMARK(BM_Calibration)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
