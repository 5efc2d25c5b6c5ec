#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qtrade/statevector.hpp"

namespace qtrade {

using Qubit = std::size_t;

enum class GateKind {
  PauliX,
  CNot,
  Toffoli,
  BasisPermutation,
  Hadamard,
  Rotation,
  ControlledRotation,
  Oracle,
};

std::string to_string(GateKind kind);

// Local basis map of a BasisPermutation: local input j goes to image[j] with
// factor phase[j] (phase empty means all ones).
struct PermutationTable {
  std::vector<std::uint64_t> image;
  std::vector<Complex> phase;
};

// A typed gate. qubits() lists every qubit the gate touches, in this order:
//   PauliX/Hadamard/Rotation: {target}
//   CNot: {control, target}; Toffoli: {c0, c1, target}
//   ControlledRotation: {controls..., target}
//   BasisPermutation: the permuted register, qubits[0] = local bit 0
//   Oracle: {index register..., flag}
class Gate {
 public:
  static Gate pauli_x(Qubit target);
  static Gate cnot(Qubit control, Qubit target);
  static Gate toffoli(Qubit c0, Qubit c1, Qubit target);
  static Gate hadamard(Qubit target);
  // R(theta) = [[cos, -sin], [sin, cos]], so R(theta)|0> = cos|0> + sin|1>.
  static Gate rotation(Qubit target, double theta);
  // R(theta) on `target` when every control is 1.
  static Gate controlled_rotation(std::vector<Qubit> controls, Qubit target,
                                  double theta);
  // R(angles[c]) on `target`, where c is the value of the control register
  // (controls[0] = bit 0). angles.size() must be 2^controls.size().
  static Gate multiplexed_rotation(std::vector<Qubit> controls, Qubit target,
                                   std::vector<double> angles);
  static Gate basis_permutation(std::vector<Qubit> qubits,
                                std::vector<std::uint64_t> image,
                                std::vector<Complex> phase = {});
  // Diagonal phase gate sum_j phase[j] |j><j| over `qubits`.
  static Gate phase(std::vector<Qubit> qubits, std::vector<Complex> phase);
  // |i, b> -> |i, b xor bits[i]>; indices >= bits.size() act as identity.
  static Gate oracle(std::vector<Qubit> index_register, Qubit flag,
                     std::shared_ptr<const std::vector<std::uint8_t>> bits);

  GateKind kind() const { return kind_; }
  std::span<const Qubit> qubits() const { return qubits_; }
  std::size_t arity() const { return qubits_.size(); }
  Qubit target() const { return qubits_.back(); }
  std::span<const Qubit> controls() const;

  // Rotation: one angle. ControlledRotation: one angle per control pattern.
  std::span<const double> angles() const { return angles_; }
  const PermutationTable& permutation() const { return *perm_; }
  std::span<const std::uint8_t> oracle_bits() const { return *oracle_bits_; }

  // Dense 2^arity matrix over qubits() (column-major: entry (r, c) at
  // r + c * 2^arity). Used by checks and tests; arity must be <= 12.
  std::vector<Complex> local_matrix() const;

 private:
  Gate(GateKind kind, std::vector<Qubit> qubits);

  GateKind kind_;
  std::vector<Qubit> qubits_;
  std::vector<double> angles_;
  std::shared_ptr<const PermutationTable> perm_;
  std::shared_ptr<const std::vector<std::uint8_t>> oracle_bits_;
};

// {0, 1, ..., n-1}
std::vector<Qubit> all_qubits(std::size_t n);

// Entries with modulus above this count as nonzero.
inline constexpr double kClassificationTolerance = 1e-10;

// True iff some column of the gate matrix has more than one nonzero entry.
bool is_basis_changing(const Gate& gate);

// Unitary image of `state`. Throws ValidationError if a gate qubit is outside
// the register.
Statevector apply_gate(Statevector state, const Gate& gate);

}  // namespace qtrade
