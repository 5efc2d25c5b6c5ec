#include "qtrade/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qtrade/error.hpp"

namespace qtrade {

double shannon_entropy(const ProbDist& d) {
  double h = 0.0;
  for (double p : d.probs()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(0.0, h);
}

double state_entropy(const Statevector& s) {
  return shannon_entropy(measurement_distribution(s));
}

ProbDist smoothed_distribution(const ProbDist& d, double eps) {
  if (!(eps >= 0.0 && eps < 2.0)) {
    throw ValidationError("eps must lie in [0, 2)");
  }
  std::vector<double> p(d.probs().begin(), d.probs().end());
  const std::size_t top = d.argmax();
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  double budget = eps / 2.0;
  for (std::size_t i : order) {
    if (budget <= 0.0) break;
    if (i == top) continue;
    const double take = std::min(p[i], budget);
    p[i] -= take;
    p[top] += take;
    budget -= take;
  }
  return ProbDist(std::move(p), std::vector<std::uint64_t>(d.labels().begin(),
                                                           d.labels().end()));
}

double smoothed_entropy_lb(const ProbDist& d, double eps) {
  return shannon_entropy(smoothed_distribution(d, eps));
}

EntropyTrace entropy_trace(const Circuit& circuit) {
  EntropyTrace trace;
  trace.values.push_back(state_entropy(Statevector(circuit.num_qubits())));
  simulate(circuit, Statevector(circuit.num_qubits()),
           [&](std::size_t index, const Gate& gate, const Statevector& state) {
             if (!is_basis_changing(gate)) return;
             trace.values.push_back(state_entropy(state));
             trace.gate_arities.push_back(gate.arity());
             trace.gate_indices.push_back(index);
           });
  return trace;
}

std::vector<double> entropy_profile(const Circuit& circuit) {
  std::vector<double> out;
  out.reserve(circuit.size() + 1);
  out.push_back(state_entropy(Statevector(circuit.num_qubits())));
  simulate(circuit, Statevector(circuit.num_qubits()),
           [&](std::size_t, const Gate&, const Statevector& state) {
             out.push_back(state_entropy(state));
           });
  return out;
}

}  // namespace qtrade
