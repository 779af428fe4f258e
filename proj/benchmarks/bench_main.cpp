#include <random>

#include <benchmark/benchmark.h>

#include "qdrazin/cramer.hpp"
#include "qdrazin/drazin.hpp"
#include "qdrazin/ncdet.hpp"

namespace {

using qdrazin::QMatrix;
using qdrazin::Quaternion;

QMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Quaternion> entries;
  for (std::size_t t = 0; t < rows * cols; ++t) entries.push_back({d(rng), d(rng), d(rng), d(rng)});
  return {rows, cols, std::move(entries)};
}

// G G* with G n x inner, so rank <= inner.
QMatrix random_hermitian(std::size_t n, std::size_t inner, std::uint64_t seed) {
  const QMatrix g = random_matrix(n, inner, seed);
  return qdrazin::mat_mul(g, qdrazin::adjoint(g));
}

void BM_RowDeterminant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(qdrazin::rdet(a, 1));
}
BENCHMARK(BM_RowDeterminant)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

void BM_ColumnDeterminant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_matrix(n, n, 8);
  for (auto _ : state) benchmark::DoNotOptimize(qdrazin::cdet(a, 1));
}
BENCHMARK(BM_ColumnDeterminant)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

void BM_DrazinInverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_hermitian(n, n - 1, 9);
  const qdrazin::DrazinOptions options{state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(qdrazin::drazin_inverse(a, options));
}
BENCHMARK(BM_DrazinInverse)
    ->ArgsProduct({{2, 3, 4, 5}, {0, 1}})
    ->ArgNames({"n", "checked"})
    ->Unit(benchmark::kMillisecond);

void BM_SolveAxb(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_hermitian(n, n - 1, 10);
  const QMatrix b = random_hermitian(n, n - 1, 11);
  const QMatrix d = random_matrix(n, n, 12);
  const qdrazin::SolveOptions options{state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(qdrazin::solve_axb(a, d, b, options));
}
BENCHMARK(BM_SolveAxb)
    ->ArgsProduct({{2, 3, 4}, {0, 1}})
    ->ArgNames({"n", "checked"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
