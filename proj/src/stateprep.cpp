#include "qtrade/stateprep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qtrade/entropy.hpp"
#include "qtrade/error.hpp"

namespace qtrade {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(v - 1));
}

// Masses of every prefix length: levels[t][y] = q_y for y in {0,1}^t.
std::vector<std::vector<double>> prefix_masses(const ProbDist& q, std::size_t k) {
  std::vector<std::vector<double>> levels(k + 1);
  levels[k].assign(q.probs().begin(), q.probs().end());
  for (std::size_t t = k; t-- > 0;) {
    levels[t].resize(std::size_t{1} << t);
    for (std::size_t y = 0; y < levels[t].size(); ++y) {
      levels[t][y] = levels[t + 1][2 * y] + levels[t + 1][2 * y + 1];
    }
  }
  return levels;
}

std::size_t log2_size(const ProbDist& q) {
  if (!std::has_single_bit(q.size())) {
    throw ValidationError("distribution size must be a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(q.size()));
}

}  // namespace

TargetState::TargetState(std::uint64_t num_outcomes, std::vector<TargetEntry> entries)
    : num_outcomes_(num_outcomes),
      num_qubits_(ceil_log2(num_outcomes)),
      entries_(std::move(entries)) {
  if (num_outcomes_ == 0) throw ValidationError("target needs at least one outcome");
  std::sort(entries_.begin(), entries_.end(),
            [](const TargetEntry& a, const TargetEntry& b) { return a.index < b.index; });
  double sum = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const TargetEntry& e = entries_[i];
    if (e.index >= num_outcomes_) throw ValidationError("target index out of range");
    if (i > 0 && entries_[i - 1].index == e.index) {
      throw ValidationError("target lists an index twice");
    }
    if (!(e.probability >= 0.0)) throw ValidationError("negative target probability");
    if (!(e.phase >= 0.0 && e.phase < kTwoPi)) {
      throw ValidationError("target phase outside [0, 2 pi)");
    }
    sum += e.probability;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("target probabilities sum to " + std::to_string(sum));
  }
  if (num_qubits_ > max_qubits()) {
    throw CapacityError("target needs " + std::to_string(num_qubits_) +
                        " qubits, above the cap of " + std::to_string(max_qubits()));
  }
}

TargetState TargetState::from_state(const Statevector& state) {
  std::vector<TargetEntry> entries;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    double phase = std::arg(state[i]);
    if (phase < 0.0) phase += kTwoPi;
    if (phase >= kTwoPi) phase = 0.0;
    entries.push_back({i, p, phase});
  }
  // Renormalize away rounding in the squared moduli.
  double sum = 0.0;
  for (const auto& e : entries) sum += e.probability;
  for (auto& e : entries) e.probability /= sum;
  return TargetState(state.dimension(), std::move(entries));
}

double TargetState::entropy() const {
  double h = 0.0;
  for (const auto& e : entries_) {
    if (e.probability > 0.0) h -= e.probability * std::log2(e.probability);
  }
  return std::max(0.0, h);
}

Statevector TargetState::to_state() const {
  Amplitudes amps(std::size_t{1} << num_qubits_);
  for (const auto& e : entries_) {
    amps[e.index] = std::polar(std::sqrt(e.probability), e.phase);
  }
  return Statevector::from_amplitudes(std::move(amps), 1e-8);
}

TargetState random_target(std::size_t num_qubits, std::mt19937_64& rng) {
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  std::uniform_int_distribution<std::uint64_t> support_size(1, dim);
  const std::uint64_t support = support_size(rng);
  std::vector<std::uint64_t> indices(dim);
  std::iota(indices.begin(), indices.end(), std::uint64_t{0});
  std::shuffle(indices.begin(), indices.end(), rng);
  indices.resize(support);

  std::exponential_distribution<double> weight(1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<TargetEntry> entries;
  double total = 0.0;
  for (std::uint64_t i : indices) {
    const double w = weight(rng);
    total += w;
    entries.push_back({i, w, angle(rng)});
  }
  for (auto& e : entries) {
    e.probability /= total;
    if (e.phase >= kTwoPi) e.phase = 0.0;
  }
  return TargetState(dim, std::move(entries));
}

double TruncationPlan::truncation_distance() const {
  // ||phi - phi_W||^2 = 2 - 2 sqrt(1 - p); written to avoid cancellation.
  const double s = std::sqrt(std::max(0.0, 1.0 - tail_mass));
  const double d2 = 2.0 * tail_mass / (1.0 + s);
  return std::sqrt(std::max(0.0, d2));
}

TruncationPlan plan_truncation_with_lambda(const TargetState& target, double lambda) {
  if (!(lambda > 1.0)) throw ValidationError("lambda must exceed 1");
  TruncationPlan plan;
  plan.lambda = lambda;
  plan.entropy = target.entropy();

  std::vector<TargetEntry> entries;
  for (const auto& e : target.entries()) {
    if (e.probability > 0.0) entries.push_back(e);
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const TargetEntry& a, const TargetEntry& b) {
                     return a.probability > b.probability;
                   });

  if (plan.entropy == 0.0 || entries.size() == 1) {
    plan.kept = {entries.front().index};
    plan.kept_probs = {entries.front().probability};
    for (std::size_t i = 1; i < entries.size(); ++i) {
      plan.tail_mass += entries[i].probability;
    }
    plan.k = 0;
    return plan;
  }

  // p_i >= 2^{-lambda H}  <=>  -log2 p_i <= lambda H; ties within rounding
  // count as kept.
  const double cutoff = lambda * plan.entropy;
  const double slack = 1e-12 * std::max(1.0, cutoff);
  for (const auto& e : entries) {
    if (-std::log2(e.probability) <= cutoff + slack) {
      plan.kept.push_back(e.index);
      plan.kept_probs.push_back(e.probability);
    } else {
      plan.tail_mass += e.probability;
    }
  }
  plan.k = ceil_log2(plan.kept.size());
  return plan;
}

TruncationPlan plan_truncation(const TargetState& target, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0, 1)");
  return plan_truncation_with_lambda(target, 2.0 / eps);
}

SynthesisPlan plan_synthesis(const ProbDist& q, std::size_t precision) {
  const std::size_t k = log2_size(q);
  if (k > 0 && (precision < 1 || precision > 60)) {
    throw ValidationError("precision must lie in [1, 60]");
  }
  SynthesisPlan plan;
  plan.k = k;
  plan.precision = precision;
  const auto levels = prefix_masses(q, k);
  const double scale = std::ldexp(1.0, static_cast<int>(precision));
  const std::uint64_t max_bits = precision == 0 ? 0 : (std::uint64_t{1} << (precision - 1));
  for (std::size_t t = 0; t < k; ++t) {
    StageAngles stage;
    const std::size_t width = std::size_t{1} << t;
    stage.mass = levels[t];
    stage.theta.assign(width, 0.0);
    stage.bits.assign(width, 0);
    stage.quantized.assign(width, 0.0);
    for (std::size_t y = 0; y < width; ++y) {
      const double qy = levels[t][y];
      if (!(qy > 0.0)) continue;
      const double ratio = std::clamp(levels[t + 1][2 * y] / qy, 0.0, 1.0);
      const double theta = std::acos(std::sqrt(ratio));
      // First l binary digits of theta / pi; values within 1e-9 of the next
      // grid point snap up so exactly representable angles stay exact.
      const double v = theta / kPi * scale;
      const auto bits = std::min(static_cast<std::uint64_t>(std::floor(v + 1e-9)), max_bits);
      stage.theta[y] = theta;
      stage.bits[y] = bits;
      stage.quantized[y] = static_cast<double>(bits) * kPi / scale;
    }
    plan.stages.push_back(std::move(stage));
  }
  return plan;
}

NonnegSynthesis synthesize_nonneg(const ProbDist& q, std::size_t precision) {
  NonnegSynthesis out;
  out.plan = plan_synthesis(q, precision);
  const std::size_t k = out.plan.k;
  out.circuit = Circuit(k);
  out.model_count = k * precision;
  for (std::size_t t = 0; t < k; ++t) {
    const StageAngles& stage = out.plan.stages[t];
    const Qubit target = k - 1 - t;
    std::vector<Qubit> controls(t);
    for (std::size_t j = 0; j < t; ++j) controls[j] = k - t + j;
    for (std::size_t s = 1; s <= precision; ++s) {
      const std::uint64_t mask = std::uint64_t{1} << (precision - s);
      const double angle = kPi / std::ldexp(1.0, static_cast<int>(s));
      std::vector<double> angles(stage.bits.size(), 0.0);
      bool any = false;
      for (std::size_t y = 0; y < angles.size(); ++y) {
        if (stage.bits[y] & mask) {
          angles[y] = angle;
          any = true;
        }
      }
      if (!any) continue;
      if (t == 0) {
        out.circuit.add(Gate::rotation(target, angles[0]));
      } else {
        out.circuit.add(Gate::multiplexed_rotation(controls, target, std::move(angles)));
      }
      ++out.emitted_rotations;
    }
    out.stage_end.push_back(out.circuit.size());
  }
  return out;
}

Statevector exact_stage_state(const ProbDist& q, std::size_t t) {
  const std::size_t k = log2_size(q);
  if (t > k) throw ValidationError("stage index out of range");
  const auto levels = prefix_masses(q, k);
  Amplitudes amps(q.size());
  for (std::size_t y = 0; y < levels[t].size(); ++y) {
    amps[y << (k - t)] = std::sqrt(levels[t][y]);
  }
  return Statevector::from_amplitudes(std::move(amps), 1e-8);
}

PrepResult synthesize(const TargetState& target, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0, 1)");
  PrepResult result;
  PrepReport& report = result.report;
  report.requested_eps = eps;
  report.lambda_nominal = 2.0 / eps;
  report.entropy_h = target.entropy();

  // Smallest threshold level whose exact truncation distance fits eps / 2.
  double lambda = report.lambda_nominal;
  if (report.entropy_h > 0.0) {
    std::vector<double> p;
    for (const auto& e : target.entries()) {
      if (e.probability > 0.0) p.push_back(e.probability);
    }
    std::sort(p.begin(), p.end(), std::greater<>());
    std::vector<double> tail(p.size() + 1, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) tail[i] = tail[i + 1] + p[i];
    const double budget = eps / 2.0;
    for (std::size_t len = 1; len <= p.size(); ++len) {
      if (len < p.size() && p[len] == p[len - 1]) continue;  // keep ties together
      const double s = std::sqrt(std::max(0.0, 1.0 - tail[len]));
      if (std::sqrt(2.0 * tail[len] / (1.0 + s)) <= budget) {
        lambda = std::max(lambda, -std::log2(p[len - 1]) / report.entropy_h);
        break;
      }
    }
  }
  report.lambda_escalated = lambda > report.lambda_nominal;
  result.truncation = plan_truncation_with_lambda(target, lambda);
  const TruncationPlan& plan = result.truncation;
  report.lambda = lambda;
  report.k = plan.k;
  report.kept_count = plan.kept_count();
  report.tail_mass = plan.tail_mass;

  const std::size_t n = target.num_qubits();
  report.num_qubits = n;
  if (plan.k > max_qubits()) {
    throw CapacityError("synthesis needs " + std::to_string(plan.k) +
                        " qubits, above the cap of " + std::to_string(max_qubits()));
  }

  // Renormalized kept distribution over {0,1}^k in code order.
  std::vector<double> q(std::size_t{1} << plan.k, 0.0);
  double kept_total = 0.0;
  for (double v : plan.kept_probs) kept_total += v;
  for (std::size_t c = 0; c < plan.kept.size(); ++c) q[c] = plan.kept_probs[c] / kept_total;

  const double kd = static_cast<double>(plan.k);
  report.precision = plan.k == 0 ? 0
      : static_cast<std::size_t>(std::ceil(std::log2(2.0 * kPi * kd / eps)));
  report.precision_alt = plan.k == 0 ? 0
      : static_cast<std::size_t>(std::max(1.0, std::ceil(std::log2(kd / eps))));
  NonnegSynthesis staged = synthesize_nonneg(ProbDist(std::move(q), 1e-9), report.precision);
  report.basis_changing_count = staged.model_count;
  report.emitted_rotations = staged.emitted_rotations;

  Circuit circuit(n);
  circuit.append(staged.circuit);

  // sigma^{-1}: code c -> kept[c]; unused codes fill the unused indices.
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (n > 0) {
    std::vector<std::uint64_t> image(dim);
    std::vector<bool> used(dim, false);
    for (std::size_t c = 0; c < plan.kept.size(); ++c) {
      image[c] = plan.kept[c];
      used[plan.kept[c]] = true;
    }
    std::uint64_t next = 0;
    for (std::uint64_t c = plan.kept.size(); c < dim; ++c) {
      while (used[next]) ++next;
      image[c] = next++;
    }
    bool identity = true;
    for (std::uint64_t c = 0; c < dim && identity; ++c) identity = image[c] == c;
    if (!identity) circuit.add(Gate::basis_permutation(all_qubits(n), std::move(image)));

    std::vector<Complex> phases(dim, Complex{1.0, 0.0});
    bool trivial = true;
    for (const auto& e : target.entries()) {
      if (e.phase != 0.0) {
        phases[e.index] = std::polar(1.0, e.phase);
        trivial = false;
      }
    }
    if (!trivial) circuit.add(Gate::phase(all_qubits(n), std::move(phases)));
  }

  report.emitted_basis_changing = count_basis_changing(circuit);
  report.layer_count = count_layers(circuit);
  report.achieved_distance = verify_prep(circuit, target);
  result.synthesis = std::move(staged.plan);
  result.circuit = std::move(circuit);
  return result;
}

double verify_prep(const Circuit& circuit, const TargetState& target) {
  if (circuit.num_qubits() < target.num_qubits()) {
    throw ValidationError("circuit register is narrower than the target");
  }
  const Statevector produced = simulate(circuit);
  const Statevector wanted = target.to_state().embedded(circuit.num_qubits());
  return l2_distance(produced, wanted);
}

}  // namespace qtrade
