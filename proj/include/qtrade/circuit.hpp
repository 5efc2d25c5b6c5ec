#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qtrade/gate.hpp"
#include "qtrade/statevector.hpp"

namespace qtrade {

// Ordered gate list over a fixed register width.
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

  // Throws ValidationError if the gate touches a qubit >= num_qubits().
  Circuit& add(Gate gate);
  Circuit& append(const Circuit& other);

  std::size_t num_qubits() const { return num_qubits_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

// Called after each gate with its index and the state it produced.
using GateObserver =
    std::function<void(std::size_t index, const Gate& gate, const Statevector& state)>;

Statevector simulate(const Circuit& circuit, Statevector initial,
                     const GateObserver& observer = {});
// From |0...0>.
Statevector simulate(const Circuit& circuit);

std::size_t count_basis_changing(const Circuit& circuit);

// Layer id of each gate: basis-changing gates get the index of the maximal
// run of pairwise qubit-disjoint basis-changing gates they belong to; a
// basis-preserving gate closes the open run and gets nullopt.
std::vector<std::optional<std::size_t>> layer_assignment(const Circuit& circuit);

std::size_t count_layers(const Circuit& circuit);

std::size_t count_oracle_gates(const Circuit& circuit);

}  // namespace qtrade
