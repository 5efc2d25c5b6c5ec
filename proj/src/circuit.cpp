#include "qtrade/circuit.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "qtrade/error.hpp"

namespace qtrade {

Circuit& Circuit::add(Gate gate) {
  for (Qubit q : gate.qubits()) {
    if (q >= num_qubits_) {
      throw ValidationError("gate " + to_string(gate.kind()) + " uses qubit " +
                            std::to_string(q) + " outside a " +
                            std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  for (const Gate& g : other.gates()) add(g);
  return *this;
}

Statevector simulate(const Circuit& circuit, Statevector initial,
                     const GateObserver& observer) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw ValidationError("initial state width does not match the circuit");
  }
  Statevector state = std::move(initial);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    state = apply_gate(std::move(state), circuit[i]);
    if (observer) observer(i, circuit[i], state);
  }
  return state;
}

Statevector simulate(const Circuit& circuit) {
  return simulate(circuit, Statevector(circuit.num_qubits()));
}

std::size_t count_basis_changing(const Circuit& circuit) {
  return static_cast<std::size_t>(std::count_if(
      circuit.gates().begin(), circuit.gates().end(),
      [](const Gate& g) { return is_basis_changing(g); }));
}

std::vector<std::optional<std::size_t>> layer_assignment(const Circuit& circuit) {
  std::vector<std::optional<std::size_t>> out(circuit.size());
  std::unordered_set<Qubit> busy;
  bool open = false;
  std::size_t layers = 0;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit[i];
    if (!is_basis_changing(g)) {
      open = false;
      continue;
    }
    const bool disjoint = std::none_of(g.qubits().begin(), g.qubits().end(),
                                       [&](Qubit q) { return busy.count(q) > 0; });
    if (!open || !disjoint) {
      busy.clear();
      open = true;
      ++layers;
    }
    busy.insert(g.qubits().begin(), g.qubits().end());
    out[i] = layers - 1;
  }
  return out;
}

std::size_t count_layers(const Circuit& circuit) {
  std::size_t layers = 0;
  for (const auto& id : layer_assignment(circuit)) {
    if (id) layers = std::max(layers, *id + 1);
  }
  return layers;
}

std::size_t count_oracle_gates(const Circuit& circuit) {
  return static_cast<std::size_t>(std::count_if(
      circuit.gates().begin(), circuit.gates().end(),
      [](const Gate& g) { return g.kind() == GateKind::Oracle; }));
}

}  // namespace qtrade
