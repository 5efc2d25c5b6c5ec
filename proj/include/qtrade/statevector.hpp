#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qtrade/prob_dist.hpp"

namespace qtrade {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

namespace detail {
struct StateAccess;
}

// Dense state of `num_qubits` qubits; amplitude index bit q is qubit q.
// Values are immutable once built; gate application returns a new state.
class Statevector {
 public:
  static constexpr double kNormTolerance = 1e-10;

  // |0...0> on `num_qubits` qubits.
  explicit Statevector(std::size_t num_qubits = 0);

  static Statevector basis(std::size_t num_qubits, std::uint64_t index);
  static Statevector uniform(std::size_t num_qubits);
  // Length must be a power of two and the norm within `tolerance` of 1.
  static Statevector from_amplitudes(Amplitudes amps,
                                     double tolerance = kNormTolerance);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  // Same amplitudes on a wider register (new high qubits in |0>).
  Statevector embedded(std::size_t num_qubits) const;

 private:
  friend struct detail::StateAccess;
  Statevector(std::size_t num_qubits, Amplitudes amps);

  std::size_t num_qubits_ = 0;
  Amplitudes amps_;
};

namespace detail {
// Mutable access for the simulator internals.
struct StateAccess {
  static Amplitudes& amps(Statevector& s) { return s.amps_; }
  static Statevector adopt(std::size_t num_qubits, Amplitudes amps) {
    return Statevector(num_qubits, std::move(amps));
  }
};
}  // namespace detail

ProbDist measurement_distribution(const Statevector& state);

// <a|b>
Complex inner_product(const Statevector& a, const Statevector& b);

double l2_distance(const Statevector& a, const Statevector& b);

// Trace norm (sum of singular values) of |a><a| - |b><b|, i.e.
// 2 sqrt(1 - |<a|b>|^2); ranges over [0, 2].
double trace_distance_pure(const Statevector& a, const Statevector& b);

}  // namespace qtrade
