#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtrade/circuit.hpp"
#include "qtrade/prob_dist.hpp"
#include "qtrade/statevector.hpp"

namespace qtrade {

struct TargetEntry {
  std::uint64_t index = 0;
  double probability = 0.0;
  double phase = 0.0;  // radians in [0, 2 pi)
};

// sum_i e^{i phase_i} sqrt(p_i) |i> over N outcomes.
class TargetState {
 public:
  TargetState(std::uint64_t num_outcomes, std::vector<TargetEntry> entries);
  static TargetState from_state(const Statevector& state);

  std::uint64_t num_outcomes() const { return num_outcomes_; }
  // ceil(log2 N)
  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<TargetEntry>& entries() const { return entries_; }
  double entropy() const;
  Statevector to_state() const;

 private:
  std::uint64_t num_outcomes_;
  std::size_t num_qubits_;
  std::vector<TargetEntry> entries_;
};

// Dirichlet(1, ..., 1) weights on a random support of a 2^num_qubits space,
// with uniform random phases.
TargetState random_target(std::size_t num_qubits, std::mt19937_64& rng);

// Keeps W = {i : p_i >= 2^{-lambda H}} and orders it by descending p (ties
// by ascending index); kept[c] is the outcome that code c stands for.
struct TruncationPlan {
  double lambda = 0.0;
  double entropy = 0.0;      // H(phi), bits
  double tail_mass = 0.0;    // sum of p_i outside W
  std::size_t k = 0;         // ceil(log2 |W|)
  std::vector<std::uint64_t> kept;
  std::vector<double> kept_probs;  // p_{kept[c]}, not renormalized

  std::size_t kept_count() const { return kept.size(); }
  // Exact l2 distance between the target and its renormalized truncation.
  double truncation_distance() const;
};

// lambda = 2 / eps.
TruncationPlan plan_truncation(const TargetState& target, double eps);
TruncationPlan plan_truncation_with_lambda(const TargetState& target,
                                           double lambda);

// Angle tables of one stage: for prefix y (t bits, first bit most
// significant) with mass q_y > 0, theta_y = arccos sqrt(q_{y0} / q_y) and its
// first `precision` binary digits of theta_y / pi.
struct StageAngles {
  std::vector<double> mass;       // q_y
  std::vector<double> theta;      // exact angle
  std::vector<std::uint64_t> bits;  // a_{y,1..l}, a_{y,1} most significant
  std::vector<double> quantized;  // theta'_y = sum_s a_{y,s} pi / 2^s
};

struct SynthesisPlan {
  std::size_t k = 0;
  std::size_t precision = 0;
  std::vector<StageAngles> stages;  // stage t has 2^t entries
};

SynthesisPlan plan_synthesis(const ProbDist& q, std::size_t precision);

struct NonnegSynthesis {
  Circuit circuit;
  SynthesisPlan plan;
  std::size_t emitted_rotations = 0;
  std::size_t model_count = 0;  // k * precision
  // stage_end[t]: gate count once stages 0..t are emitted.
  std::vector<std::size_t> stage_end;
};

// Circuit over k = log2(q.size()) qubits mapping |0...0> to approximately
// sum_x sqrt(q_x) |x>. Code bit 1 (the first) lives on qubit k-1. Stage t
// rotates qubit k-1-t with up to `precision` multiplexed rotations, one per
// bit plane s, by angle a_{y,s} pi / 2^s on prefix y; empty planes are elided.
NonnegSynthesis synthesize_nonneg(const ProbDist& q, std::size_t precision);

// sum_{y in {0,1}^t} sqrt(q_y) |y>|0...0>, the exact state after stage t.
Statevector exact_stage_state(const ProbDist& q, std::size_t t);

struct PrepReport {
  double requested_eps = 0.0;
  double achieved_distance = 0.0;
  std::size_t basis_changing_count = 0;  // k * precision
  std::size_t emitted_basis_changing = 0;
  std::size_t emitted_rotations = 0;
  std::size_t layer_count = 0;
  double lambda = 0.0;
  double lambda_nominal = 0.0;  // 2 / eps
  bool lambda_escalated = false;
  std::size_t k = 0;
  std::size_t precision = 0;       // ceil(log2(2 pi k / eps))
  std::size_t precision_alt = 0;   // ceil(log2(k / eps))
  double entropy_h = 0.0;
  std::size_t kept_count = 0;
  double tail_mass = 0.0;
  std::size_t num_qubits = 0;
};

struct PrepResult {
  Circuit circuit;
  PrepReport report;
  TruncationPlan truncation;
  SynthesisPlan synthesis;
};

// Phase strip, truncation, relabeling, staged rotations, then the relabeling
// and phases restored. Half of eps goes to truncation, half to quantization.
PrepResult synthesize(const TargetState& target, double eps);

// l2 distance between simulate(circuit) and the target embedded in the
// circuit's register.
double verify_prep(const Circuit& circuit, const TargetState& target);

}  // namespace qtrade
