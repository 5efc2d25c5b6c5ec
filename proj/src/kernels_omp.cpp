#include "qtrade/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Parallel versions of the serial kernels. Loops below this size stay on one
// thread; the fork/join cost dominates for small registers.
#define QTRADE_OMP_MIN_DIM 16384

namespace qtrade::kernels {

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qtrade::kernels

namespace qtrade::kernels::omp {

namespace {

// Inserts a zero bit at position `bit` of `k`, enumerating exactly the indices
// whose target bit is clear.
inline std::uint64_t insert_zero(std::uint64_t k, std::size_t bit) {
  const std::uint64_t low = k & ((1ULL << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

// Plain complex product, without the inf/nan recovery branches of operator*.
inline Complex cmul(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void apply_1q(std::span<Complex> amps, std::size_t target, const Mat2& m) {
  const std::uint64_t bit = 1ULL << target;
  const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
  const Complex m00 = m.m00, m01 = m.m01, m10 = m.m10, m11 = m.m11;
#pragma omp parallel for if (half >= QTRADE_OMP_MIN_DIM / 2) schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), target);
    const Complex a0 = data[i];
    const Complex a1 = data[i | bit];
    data[i] = cmul(m00, a0) + cmul(m01, a1);
    data[i | bit] = cmul(m10, a0) + cmul(m11, a1);
  }
}

void apply_mcx(std::span<Complex> amps, std::uint64_t control_mask,
               std::size_t target) {
  const std::uint64_t bit = 1ULL << target;
  const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for if (half >= QTRADE_OMP_MIN_DIM / 2) schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), target);
    if ((i & control_mask) != control_mask) continue;
    std::swap(data[i], data[i | bit]);
  }
}

void apply_multiplexed_rotation(std::span<Complex> amps,
                                std::span<const std::size_t> controls,
                                std::size_t target,
                                std::span<const double> angles) {
  const std::uint64_t bit = 1ULL << target;
  const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
  std::vector<double> cos_table(angles.size()), sin_table(angles.size());
  for (std::size_t a = 0; a < angles.size(); ++a) {
    cos_table[a] = std::cos(angles[a]);
    sin_table[a] = std::sin(angles[a]);
  }
#pragma omp parallel for if (half >= QTRADE_OMP_MIN_DIM / 2) schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), target);
    const std::uint64_t a = gather_bits(i, controls);
    if (angles[a] == 0.0) continue;
    const double c = cos_table[a];
    const double s = sin_table[a];
    const Complex a0 = data[i];
    const Complex a1 = data[i | bit];
    data[i] = c * a0 - s * a1;
    data[i | bit] = s * a0 + c * a1;
  }
}

void apply_permutation(std::span<const Complex> in, std::span<Complex> out,
                       std::span<const std::size_t> qubits,
                       std::span<const std::uint64_t> image,
                       std::span<const Complex> phases) {
  const std::int64_t dim = static_cast<std::int64_t>(in.size());
  const bool with_phase = !phases.empty();
#pragma omp parallel for if (dim >= QTRADE_OMP_MIN_DIM) schedule(static)
  for (std::int64_t ii = 0; ii < dim; ++ii) {
    const auto i = static_cast<std::uint64_t>(ii);
    const std::uint64_t local = gather_bits(i, qubits);
    const std::uint64_t j = scatter_bits(i, qubits, image[local]);
    out[j] = with_phase ? cmul(phases[local], in[i]) : in[i];
  }
}

void apply_oracle(std::span<Complex> amps,
                  std::span<const std::size_t> index_qubits, std::size_t flag,
                  std::span<const std::uint8_t> bits) {
  const std::uint64_t fbit = 1ULL << flag;
  const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for if (half >= QTRADE_OMP_MIN_DIM / 2) schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), flag);
    const std::uint64_t x = gather_bits(i, index_qubits);
    if (x < bits.size() && bits[x]) std::swap(data[i], data[i | fbit]);
  }
}

double norm_squared(std::span<const Complex> amps) {
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
  const Complex* data = amps.data();
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) if (dim >= QTRADE_OMP_MIN_DIM) schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) acc += std::norm(data[i]);
  return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  const std::int64_t dim = static_cast<std::int64_t>(a.size());
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for reduction(+ : re, im) if (dim >= QTRADE_OMP_MIN_DIM) schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) {
    const Complex t = cmul(std::conj(a[i]), b[i]);
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

double distance_squared(std::span<const Complex> a,
                        std::span<const Complex> b) {
  const std::int64_t dim = static_cast<std::int64_t>(a.size());
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) if (dim >= QTRADE_OMP_MIN_DIM) schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) acc += std::norm(a[i] - b[i]);
  return acc;
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for if (dim >= QTRADE_OMP_MIN_DIM) schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

}  // namespace qtrade::kernels::omp
