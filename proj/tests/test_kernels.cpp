#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qtrade/kernels.hpp"

using namespace qtrade::kernels;
using oracle::Amps;

namespace {

// Large enough to take the parallel path.
constexpr std::size_t kQubits = 15;

double max_diff(const Amps& a, const Amps& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Kernels, OneQubitMatchesSerial) {
  std::mt19937_64 rng(1);
  const Amps base = oracle::random_amps(kQubits, rng);
  const Mat2 m{0.6, Complex(0, -0.8), Complex(0, 0.8), -0.6};
  for (std::size_t t : {0u, 7u, 14u}) {
    Amps a = base, b = base;
    serial::apply_1q(a, t, m);
    omp::apply_1q(b, t, m);
    EXPECT_LT(max_diff(a, b), 1e-15);
  }
}

TEST(Kernels, OneQubitMatchesDense) {
  std::mt19937_64 rng(2);
  const Amps base = oracle::random_amps(4, rng);
  const Mat2 m{0.6, 0.8, -0.8, 0.6};
  Amps a = base;
  serial::apply_1q(a, 2, m);
  // Column-major local matrix from the row-major Mat2.
  const Amps dense = oracle::apply_dense(base, {2}, {m.m00, m.m10, m.m01, m.m11});
  EXPECT_LT(max_diff(a, dense), 1e-15);
}

TEST(Kernels, McxMatchesSerial) {
  std::mt19937_64 rng(3);
  const Amps base = oracle::random_amps(kQubits, rng);
  Amps a = base, b = base;
  serial::apply_mcx(a, (1u << 3) | (1u << 9), 12);
  omp::apply_mcx(b, (1u << 3) | (1u << 9), 12);
  EXPECT_EQ(max_diff(a, b), 0.0);
  EXPECT_NE(max_diff(a, base), 0.0);
}

TEST(Kernels, MultiplexedRotationMatchesSerial) {
  std::mt19937_64 rng(4);
  const Amps base = oracle::random_amps(kQubits, rng);
  const std::vector<std::size_t> controls{1, 13};
  const std::vector<double> angles{0.1, 0.7, -1.3, 2.9};
  Amps a = base, b = base;
  serial::apply_multiplexed_rotation(a, controls, 5, angles);
  omp::apply_multiplexed_rotation(b, controls, 5, angles);
  EXPECT_LT(max_diff(a, b), 1e-15);
}

TEST(Kernels, PermutationMatchesSerial) {
  std::mt19937_64 rng(5);
  const Amps base = oracle::random_amps(kQubits, rng);
  const std::vector<std::size_t> qubits{2, 11, 6};
  const std::vector<std::uint64_t> image{3, 0, 7, 1, 2, 6, 4, 5};
  std::vector<Complex> phases(8);
  for (std::size_t j = 0; j < 8; ++j) phases[j] = std::polar(1.0, 0.3 * j);
  Amps a(base.size()), b(base.size());
  serial::apply_permutation(base, a, qubits, image, phases);
  omp::apply_permutation(base, b, qubits, image, phases);
  EXPECT_EQ(max_diff(a, b), 0.0);
  EXPECT_NEAR(serial::norm_squared(a), 1.0, 1e-12);
}

TEST(Kernels, OracleMatchesSerial) {
  std::mt19937_64 rng(6);
  const Amps base = oracle::random_amps(kQubits, rng);
  const std::vector<std::size_t> index{0, 1, 2, 3, 4, 5};
  std::vector<std::uint8_t> bits(50, 0);
  bits[17] = bits[33] = 1;
  Amps a = base, b = base;
  serial::apply_oracle(a, index, 14, bits);
  omp::apply_oracle(b, index, 14, bits);
  EXPECT_EQ(max_diff(a, b), 0.0);
}

TEST(Kernels, ReductionsMatchSerial) {
  std::mt19937_64 rng(8);
  const Amps a = oracle::random_amps(kQubits, rng);
  const Amps b = oracle::random_amps(kQubits, rng);
  EXPECT_NEAR(serial::norm_squared(a), omp::norm_squared(a), 1e-12);
  EXPECT_NEAR(std::abs(serial::inner_product(a, b) - omp::inner_product(a, b)), 0.0, 1e-12);
  EXPECT_NEAR(serial::distance_squared(a, b), omp::distance_squared(a, b), 1e-12);
  std::vector<double> pa(a.size()), pb(a.size());
  serial::probabilities(a, pa);
  omp::probabilities(a, pb);
  EXPECT_EQ(pa, pb);
}

TEST(Kernels, GatherScatterRoundTrip) {
  const std::vector<std::size_t> q{4, 1, 7};
  for (std::uint64_t local = 0; local < 8; ++local) {
    const std::uint64_t idx = scatter_bits(0b1010'0000'1ULL, q, local);
    EXPECT_EQ(gather_bits(idx, q), local);
  }
}
