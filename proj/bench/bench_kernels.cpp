// Serial reference vs OpenMP kernels at the shapes used in training:
// a 512-row batch through a 784 x M layer, and the Hebbian X^T Z product.

#include <benchmark/benchmark.h>

#include "hamnet/kernels.hpp"
#include "hamnet/rng.hpp"

namespace {

hamnet::Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  hamnet::SeededRng rng(seed);
  hamnet::Matrix m(r, c);
  for (double& v : m.values()) v = rng.uniform();
  return m;
}

template <hamnet::Matrix (*Kernel)(const hamnet::Matrix&, const hamnet::Matrix&)>
void forward_layer(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto x = random_matrix(512, 784, 1);
  const auto w = random_matrix(784, m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, w));
  state.SetItemsProcessed(state.iterations() * 512 * 784 * static_cast<std::int64_t>(m));
}

template <hamnet::Matrix (*Kernel)(const hamnet::Matrix&, const hamnet::Matrix&)>
void hebbian_outer(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto x = random_matrix(512, 784, 1);
  const auto z = random_matrix(512, m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, z));
  state.SetItemsProcessed(state.iterations() * 512 * 784 * static_cast<std::int64_t>(m));
}

}  // namespace

BENCHMARK(forward_layer<hamnet::kernels::serial::matmul>)->Name("matmul/serial")->Arg(10)->Arg(30)->Arg(100)->Arg(200);
BENCHMARK(forward_layer<hamnet::kernels::matmul>)->Name("matmul/openmp")->Arg(10)->Arg(30)->Arg(100)->Arg(200);
BENCHMARK(hebbian_outer<hamnet::kernels::serial::matmul_tn>)->Name("matmul_tn/serial")->Arg(10)->Arg(30)->Arg(100)->Arg(200);
BENCHMARK(hebbian_outer<hamnet::kernels::matmul_tn>)->Name("matmul_tn/openmp")->Arg(10)->Arg(30)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
