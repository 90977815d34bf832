#include <benchmark/benchmark.h>

#include "mckay/io.hpp"
#include "mckay/oracles.hpp"

using namespace mckay;

namespace {

void CyclotomicProduct(benchmark::State& state) {
  std::int64_t n = state.range(0);
  Cyclotomic a = Cyclotomic::zero(n), b = Cyclotomic::zero(n);
  for (std::int64_t i = 0; i < euler_phi(n); ++i) {
    a += Cyclotomic::rational(Rational(i + 1, 3), 1) * Cyclotomic::root_of_unity(n, i);
    b += Cyclotomic::rational(Rational(2 * i + 1, 5), 1) * Cyclotomic::root_of_unity(n, i);
  }
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(CyclotomicProduct)->Arg(8)->Arg(60)->Arg(97);

void IcosahedralClosure(benchmark::State& state) {
  std::vector<CycMatrix> gens = spec_generators(builtin("binary_icosahedral"));
  for (auto _ : state) {
    MatrixGroup g = MatrixGroup::close(gens);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(IcosahedralClosure)->Unit(benchmark::kMillisecond);

void SpectrumAllElements(benchmark::State& state) {
  MatrixGroup g = build_group(builtin("binary_octahedral"));
  for (auto _ : state) {
    for (std::size_t i = 0; i < g.size(); ++i)
      benchmark::DoNotOptimize(eigen_spectrum(g, i).total_dim);
  }
}
BENCHMARK(SpectrumAllElements)->Unit(benchmark::kMillisecond);

void TraceDftOracle(benchmark::State& state) {
  MatrixGroup g = build_group(builtin("binary_tetrahedral"));
  for (auto _ : state) {
    for (std::size_t i = 0; i < g.size(); ++i)
      benchmark::DoNotOptimize(trace_dft_spectrum(g, i).total_dim);
  }
}
BENCHMARK(TraceDftOracle)->Unit(benchmark::kMillisecond);

void FullPrediction(benchmark::State& state) {
  MatrixGroup g = build_group(builtin("binary_icosahedral"));
  for (auto _ : state) {
    McKayReport r = predict(g);
    benchmark::DoNotOptimize(r.euler);
  }
}
BENCHMARK(FullPrediction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
