#pragma once

// Statevector kernels. Every kernel exists twice with identical semantics:
// `serial` is the reference used by tests, `omp` is the OpenMP version the
// simulator calls. Qubit q corresponds to bit q of the amplitude index.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qtrade::kernels {

using Complex = std::complex<double>;

// Row-major 2x2 matrix: {m00, m01, m10, m11}.
struct Mat2 {
  Complex m00, m01, m10, m11;
};

// Packs the bits of `index` found at `qubits` into a dense local index
// (qubits[0] becomes bit 0).
inline std::uint64_t gather_bits(std::uint64_t index,
                                 std::span<const std::size_t> qubits) {
  std::uint64_t local = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    local |= ((index >> qubits[j]) & 1ULL) << j;
  }
  return local;
}

inline std::uint64_t scatter_bits(std::uint64_t index,
                                  std::span<const std::size_t> qubits,
                                  std::uint64_t local) {
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    const std::uint64_t bit = 1ULL << qubits[j];
    index = ((local >> j) & 1ULL) ? (index | bit) : (index & ~bit);
  }
  return index;
}

#define QTRADE_KERNEL_DECLS                                                    \
  void apply_1q(std::span<Complex> amps, std::size_t target, const Mat2& m);   \
  void apply_mcx(std::span<Complex> amps, std::uint64_t control_mask,          \
                 std::size_t target);                                          \
  void apply_multiplexed_rotation(std::span<Complex> amps,                     \
                                  std::span<const std::size_t> controls,       \
                                  std::size_t target,                          \
                                  std::span<const double> angles);             \
  void apply_permutation(std::span<const Complex> in, std::span<Complex> out,  \
                         std::span<const std::size_t> qubits,                  \
                         std::span<const std::uint64_t> image,                 \
                         std::span<const Complex> phases);                     \
  void apply_oracle(std::span<Complex> amps,                                   \
                    std::span<const std::size_t> index_qubits,                 \
                    std::size_t flag, std::span<const std::uint8_t> bits);     \
  double norm_squared(std::span<const Complex> amps);                          \
  Complex inner_product(std::span<const Complex> a,                            \
                        std::span<const Complex> b);                           \
  double distance_squared(std::span<const Complex> a,                          \
                          std::span<const Complex> b);                         \
  void probabilities(std::span<const Complex> amps, std::span<double> out);

namespace serial {
QTRADE_KERNEL_DECLS
}  // namespace serial

namespace omp {
QTRADE_KERNEL_DECLS
}  // namespace omp

#undef QTRADE_KERNEL_DECLS

// Number of OpenMP threads the omp kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace qtrade::kernels
