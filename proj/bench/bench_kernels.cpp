#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "qtrade/kernels.hpp"

using namespace qtrade::kernels;

namespace {

std::vector<Complex> random_state(std::size_t qubits) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << qubits);
  for (auto& z : a) z = {g(rng), g(rng)};
  const double n = std::sqrt(serial::norm_squared(a));
  for (auto& z : a) z /= n;
  return a;
}

const Mat2 kHadamard{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};

template <void (*Apply)(std::span<Complex>, std::size_t, const Mat2&)>
void BM_OneQubit(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  auto a = random_state(qubits);
  std::size_t t = 0;
  for (auto _ : state) {
    Apply(a, t, kHadamard);
    t = (t + 1) % qubits;
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * a.size() * sizeof(Complex));
}

template <void (*Apply)(std::span<Complex>, std::span<const std::size_t>, std::size_t,
                        std::span<const double>)>
void BM_Multiplexed(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  auto a = random_state(qubits);
  const std::vector<std::size_t> controls{0, 1, 2};
  const std::vector<double> angles{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  for (auto _ : state) {
    Apply(a, controls, qubits - 1, angles);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * a.size() * sizeof(Complex));
}

template <void (*Apply)(std::span<const Complex>, std::span<Complex>,
                        std::span<const std::size_t>, std::span<const std::uint64_t>,
                        std::span<const Complex>)>
void BM_Permutation(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  const auto a = random_state(qubits);
  std::vector<Complex> out(a.size());
  std::vector<std::size_t> reg;
  for (std::size_t q = 0; q < qubits; q += 2) reg.push_back(q);
  std::vector<std::uint64_t> image(std::size_t{1} << reg.size());
  for (std::size_t j = 0; j < image.size(); ++j) image[j] = (j * 5 + 3) % image.size();
  for (auto _ : state) {
    Apply(a, out, reg, image, {});
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * a.size() * sizeof(Complex));
}

template <double (*Norm)(std::span<const Complex>)>
void BM_Norm(benchmark::State& state) {
  const auto a = random_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Norm(a));
  state.SetBytesProcessed(state.iterations() * a.size() * sizeof(Complex));
}

}  // namespace

BENCHMARK(BM_OneQubit<serial::apply_1q>)->Name("one_qubit/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_OneQubit<omp::apply_1q>)->Name("one_qubit/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Multiplexed<serial::apply_multiplexed_rotation>)
    ->Name("multiplexed/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Multiplexed<omp::apply_multiplexed_rotation>)
    ->Name("multiplexed/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Permutation<serial::apply_permutation>)
    ->Name("permutation/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Permutation<omp::apply_permutation>)
    ->Name("permutation/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Norm<serial::norm_squared>)->Name("norm/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Norm<omp::norm_squared>)->Name("norm/omp")->DenseRange(12, 22, 5);

BENCHMARK_MAIN();
