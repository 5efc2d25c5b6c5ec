#include "qtrade/kernels.hpp"

#include <cmath>

namespace qtrade::kernels::serial {

void apply_1q(std::span<Complex> amps, std::size_t target, const Mat2& m) {
  const std::uint64_t bit = 1ULL << target;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | bit];
    amps[i] = m.m00 * a0 + m.m01 * a1;
    amps[i | bit] = m.m10 * a0 + m.m11 * a1;
  }
}

void apply_mcx(std::span<Complex> amps, std::uint64_t control_mask,
               std::size_t target) {
  const std::uint64_t bit = 1ULL << target;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & bit) || (i & control_mask) != control_mask) continue;
    std::swap(amps[i], amps[i | bit]);
  }
}

void apply_multiplexed_rotation(std::span<Complex> amps,
                                std::span<const std::size_t> controls,
                                std::size_t target,
                                std::span<const double> angles) {
  const std::uint64_t bit = 1ULL << target;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const double theta = angles[gather_bits(i, controls)];
    if (theta == 0.0) continue;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | bit];
    amps[i] = c * a0 - s * a1;
    amps[i | bit] = s * a0 + c * a1;
  }
}

void apply_permutation(std::span<const Complex> in, std::span<Complex> out,
                       std::span<const std::size_t> qubits,
                       std::span<const std::uint64_t> image,
                       std::span<const Complex> phases) {
  const std::uint64_t dim = in.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t local = gather_bits(i, qubits);
    const std::uint64_t j = scatter_bits(i, qubits, image[local]);
    out[j] = phases.empty() ? in[i] : phases[local] * in[i];
  }
}

void apply_oracle(std::span<Complex> amps,
                  std::span<const std::size_t> index_qubits, std::size_t flag,
                  std::span<const std::uint8_t> bits) {
  const std::uint64_t fbit = 1ULL << flag;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & fbit) continue;
    const std::uint64_t x = gather_bits(i, index_qubits);
    if (x < bits.size() && bits[x]) std::swap(amps[i], amps[i | fbit]);
  }
}

double norm_squared(std::span<const Complex> amps) {
  double acc = 0.0;
  for (const Complex& a : amps) acc += std::norm(a);
  return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double distance_squared(std::span<const Complex> a,
                        std::span<const Complex> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return acc;
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
  for (std::size_t i = 0; i < amps.size(); ++i) out[i] = std::norm(amps[i]);
}

}  // namespace qtrade::kernels::serial
