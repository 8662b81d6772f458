// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "leibniz/catalog.hpp"
#include "leibniz/holomorph.hpp"
#include "leibniz/iso.hpp"
#include "leibniz/kernels.hpp"

namespace {

using namespace leib;

Matrix random_matrix(const FieldDesc& F, std::size_t r, std::size_t c, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < r * c; ++i) e.push_back(Scalar(F, d(rng)));
  return Matrix(F, r, c, e);
}

// A derivation system is the typical elimination workload: n^3 x n^2.
Matrix derivation_system(std::size_t n, const FieldDesc& F) { return random_matrix(F, n * n * n, n * n, 5); }

void BM_RrefSerial(benchmark::State& st) {
  const FieldDesc F = st.range(1) ? FieldDesc::prime(101) : FieldDesc::rationals();
  const Matrix m = derivation_system(static_cast<std::size_t>(st.range(0)), F);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::rref_serial(m));
}

void BM_RrefParallel(benchmark::State& st) {
  const FieldDesc F = st.range(1) ? FieldDesc::prime(101) : FieldDesc::rationals();
  const Matrix m = derivation_system(static_cast<std::size_t>(st.range(0)), F);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::rref_parallel(m));
}

Algebra big_algebra() { return lie_holomorph(catalog::get("d1")).algebra; }

void BM_RightLeibnizSerial(benchmark::State& st) {
  const Algebra L = big_algebra();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::check_identity_serial(L, kernels::Identity::RightLeibniz));
}

void BM_RightLeibnizParallel(benchmark::State& st) {
  const Algebra L = big_algebra();
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::check_identity_parallel(L, kernels::Identity::RightLeibniz));
  }
}

void BM_Search(benchmark::State& st) {
  const FieldDesc F3 = FieldDesc::prime(3);
  const Algebra a = lie_holomorph(catalog::get("L_4", F3)).algebra;
  const Algebra b = lie_holomorph(catalog::get("L_7", F3)).algebra;
  SearchOptions opts;
  opts.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(search_isomorphism(a, b, opts));
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Args({3, 0})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Args({3, 0})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RightLeibnizSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RightLeibnizParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Search)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
