#pragma once

#include <cstddef>
#include <vector>

#include "qtrade/circuit.hpp"
#include "qtrade/prob_dist.hpp"
#include "qtrade/statevector.hpp"

namespace qtrade {

// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const ProbDist& d);

// Entropy of the computational-basis measurement of `s`.
double state_entropy(const Statevector& s);

// The minimizer used by smoothed_entropy_lb: mass eps/2 taken from the
// smallest entries (smallest first) and put on the largest entry.
ProbDist smoothed_distribution(const ProbDist& d, double eps);

// min H(d') over total variation(d, d') <= eps/2, for 0 <= eps < 2. Any
// density matrix within trace distance eps of a pure state whose measurement
// distribution is d has a diagonal within total variation eps/2 of d, so the
// result lower-bounds the smoothed entropy H_eps of that state.
double smoothed_entropy_lb(const ProbDist& d, double eps);

// Entropy after each basis-changing gate of a run from |0...0>.
struct EntropyTrace {
  // values[0] is the all-zeros state; values[i+1] follows the i-th
  // basis-changing gate.
  std::vector<double> values;
  // gate_arities[i]: number of qubits touched by the i-th basis-changing gate.
  std::vector<std::size_t> gate_arities;
  // Position of that gate in the circuit.
  std::vector<std::size_t> gate_indices;
};

EntropyTrace entropy_trace(const Circuit& circuit);

// Entropy before the first gate and after every gate (size = gates + 1).
std::vector<double> entropy_profile(const Circuit& circuit);

}  // namespace qtrade
