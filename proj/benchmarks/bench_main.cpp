#include <benchmark/benchmark.h>

#include <random>

#include "ocmf/basis.hpp"
#include "ocmf/forms.hpp"
#include "ocmf/qseries.hpp"
#include "ocmf/spectral.hpp"
#include "ocmf/upmatrix.hpp"

using namespace ocmf;

namespace {

LaurentSeries<RingElement> random_series(const RingPtr& R, int qprec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RingElement> c;
  for (int n = 0; n < qprec; ++n) c.emplace_back(R, BigInt(std::to_string(rng())));
  return LaurentSeries<RingElement>(0, qprec, std::move(c), RingElement::zero(R));
}

Matrix<RingElement> random_matrix(const RingPtr& R, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<RingElement> m(n, n, RingElement::zero(R));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = RingElement(R, BigInt(std::to_string(rng())), BigInt(std::to_string(rng())));
  return m;
}

LaurentSeries<BigInt> random_int_series(int qprec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> c;
  for (int n = 0; n < qprec; ++n) c.emplace_back(std::to_string(rng()) + std::to_string(rng()));
  return LaurentSeries<BigInt>(0, qprec, std::move(c), BigInt(0));
}

void int_series_mul(benchmark::State& state, MulAlgorithm algo) {
  const int n = static_cast<int>(state.range(0));
  const auto f = random_int_series(n, 1), g = random_int_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(LaurentSeries<BigInt>::multiply(f, g, algo));
  state.SetComplexityN(n);
}

void BM_IntSeriesMulSchoolbook(benchmark::State& state) { int_series_mul(state, MulAlgorithm::Schoolbook); }
void BM_IntSeriesMulKaratsuba(benchmark::State& state) { int_series_mul(state, MulAlgorithm::Karatsuba); }

// Ring products use schoolbook with one reduction per coefficient.
void BM_RingSeriesMul(benchmark::State& state) {
  const auto R = RingContext::make(11, 20, false);
  const int n = static_cast<int>(state.range(0));
  const auto f = random_series(R, n, 1), g = random_series(R, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
  state.SetComplexityN(n);
}

void BM_JInvariant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(j_invariant(n));
}

void BM_UpMatrix(benchmark::State& state) {
  BasisSpec s;
  s.p = static_cast<int>(state.range(0));
  s.d = static_cast<int>(state.range(1));
  s.precision = 13;
  const auto fam = build_basis(s);
  for (auto _ : state) benchmark::DoNotOptimize(up_matrix(fam));
}

void BM_Pipeline(benchmark::State& state) {
  BasisSpec s;
  s.p = static_cast<int>(state.range(0));
  s.d = static_cast<int>(state.range(1));
  s.precision = 13;
  for (auto _ : state) benchmark::DoNotOptimize(newton_slopes(char_series(up_matrix(build_basis(s)))));
}

void BM_Berkowitz(benchmark::State& state) {
  const auto R = RingContext::make(17, 16, true);
  const auto m = random_matrix(R, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(berkowitz(m));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_IntSeriesMulSchoolbook)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK(BM_IntSeriesMulKaratsuba)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK(BM_RingSeriesMul)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_JInvariant)->Arg(300)->Arg(1000);
BENCHMARK(BM_UpMatrix)->Args({11, 6})->Args({17, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Args({11, 6})->Args({19, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Berkowitz)->DenseRange(5, 25, 5)->Complexity();
BENCHMARK_MAIN();
