#include "qtrade/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qtrade/error.hpp"
#include "qtrade/kernels.hpp"

namespace qtrade {

namespace {

void require_distinct(const std::vector<Qubit>& qubits) {
  std::vector<Qubit> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("gate has duplicate qubit indices");
  }
}

bool mixes_basis(double theta) {
  return std::abs(std::sin(theta)) > kClassificationTolerance &&
         std::abs(std::cos(theta)) > kClassificationTolerance;
}

// Applies `gate` with its qubit list replaced by `qubits`.
void apply_with(Amplitudes& amps, const Gate& gate,
                std::span<const Qubit> qubits) {
  using kernels::Mat2;
  const Qubit target = qubits.back();
  switch (gate.kind()) {
    case GateKind::PauliX:
      kernels::omp::apply_mcx(amps, 0, target);
      return;
    case GateKind::CNot:
      kernels::omp::apply_mcx(amps, 1ULL << qubits[0], target);
      return;
    case GateKind::Toffoli:
      kernels::omp::apply_mcx(amps, (1ULL << qubits[0]) | (1ULL << qubits[1]),
                              target);
      return;
    case GateKind::Hadamard: {
      const double r = std::numbers::sqrt2 / 2.0;
      kernels::omp::apply_1q(amps, target, Mat2{r, r, r, -r});
      return;
    }
    case GateKind::Rotation: {
      const double c = std::cos(gate.angles()[0]);
      const double s = std::sin(gate.angles()[0]);
      kernels::omp::apply_1q(amps, target, Mat2{c, -s, s, c});
      return;
    }
    case GateKind::ControlledRotation:
      kernels::omp::apply_multiplexed_rotation(
          amps, qubits.first(qubits.size() - 1), target, gate.angles());
      return;
    case GateKind::BasisPermutation: {
      Amplitudes out(amps.size());
      const PermutationTable& table = gate.permutation();
      kernels::omp::apply_permutation(amps, out, qubits, table.image,
                                      table.phase);
      amps.swap(out);
      return;
    }
    case GateKind::Oracle:
      kernels::omp::apply_oracle(amps, qubits.first(qubits.size() - 1), target,
                                 gate.oracle_bits());
      return;
  }
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::PauliX: return "PauliX";
    case GateKind::CNot: return "CNot";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::BasisPermutation: return "BasisPermutation";
    case GateKind::Hadamard: return "Hadamard";
    case GateKind::Rotation: return "Rotation";
    case GateKind::ControlledRotation: return "ControlledRotation";
    case GateKind::Oracle: return "Oracle";
  }
  return "?";
}

Gate::Gate(GateKind kind, std::vector<Qubit> qubits)
    : kind_(kind), qubits_(std::move(qubits)) {
  require_distinct(qubits_);
}

Gate Gate::pauli_x(Qubit target) { return Gate(GateKind::PauliX, {target}); }

Gate Gate::cnot(Qubit control, Qubit target) {
  return Gate(GateKind::CNot, {control, target});
}

Gate Gate::toffoli(Qubit c0, Qubit c1, Qubit target) {
  return Gate(GateKind::Toffoli, {c0, c1, target});
}

Gate Gate::hadamard(Qubit target) { return Gate(GateKind::Hadamard, {target}); }

Gate Gate::rotation(Qubit target, double theta) {
  Gate g(GateKind::Rotation, {target});
  g.angles_ = {theta};
  return g;
}

Gate Gate::controlled_rotation(std::vector<Qubit> controls, Qubit target,
                               double theta) {
  std::vector<double> angles(std::size_t{1} << controls.size(), 0.0);
  angles.back() = theta;
  return multiplexed_rotation(std::move(controls), target, std::move(angles));
}

Gate Gate::multiplexed_rotation(std::vector<Qubit> controls, Qubit target,
                                std::vector<double> angles) {
  if (controls.size() >= 32 ||
      angles.size() != (std::size_t{1} << controls.size())) {
    throw ValidationError("multiplexed rotation needs 2^controls angles");
  }
  controls.push_back(target);
  Gate g(GateKind::ControlledRotation, std::move(controls));
  g.angles_ = std::move(angles);
  return g;
}

Gate Gate::basis_permutation(std::vector<Qubit> qubits,
                             std::vector<std::uint64_t> image,
                             std::vector<Complex> phase) {
  if (qubits.empty() || qubits.size() >= 40) {
    throw ValidationError("basis permutation needs 1..39 qubits");
  }
  const std::size_t dim = std::size_t{1} << qubits.size();
  if (image.size() != dim) {
    throw ValidationError("permutation table size must be 2^qubits");
  }
  if (!phase.empty() && phase.size() != dim) {
    throw ValidationError("phase table size must be 2^qubits");
  }
  std::vector<bool> seen(dim, false);
  for (std::uint64_t v : image) {
    if (v >= dim || seen[v]) throw ValidationError("table is not a bijection");
    seen[v] = true;
  }
  for (const Complex& p : phase) {
    if (std::abs(std::abs(p) - 1.0) > kClassificationTolerance) {
      throw ValidationError("phase entries must have unit modulus");
    }
  }
  Gate g(GateKind::BasisPermutation, std::move(qubits));
  g.perm_ = std::make_shared<const PermutationTable>(
      PermutationTable{std::move(image), std::move(phase)});
  return g;
}

Gate Gate::phase(std::vector<Qubit> qubits, std::vector<Complex> phase) {
  std::vector<std::uint64_t> identity(phase.size());
  for (std::size_t j = 0; j < identity.size(); ++j) identity[j] = j;
  return basis_permutation(std::move(qubits), std::move(identity),
                           std::move(phase));
}

Gate Gate::oracle(std::vector<Qubit> index_register, Qubit flag,
                  std::shared_ptr<const std::vector<std::uint8_t>> bits) {
  if (!bits) throw ValidationError("oracle needs an input string");
  if (index_register.empty() || index_register.size() >= 40) {
    throw ValidationError("oracle index register needs 1..39 qubits");
  }
  index_register.push_back(flag);
  Gate g(GateKind::Oracle, std::move(index_register));
  g.oracle_bits_ = std::move(bits);
  return g;
}

std::span<const Qubit> Gate::controls() const {
  switch (kind_) {
    case GateKind::CNot:
    case GateKind::Toffoli:
    case GateKind::ControlledRotation:
      return std::span<const Qubit>(qubits_).first(qubits_.size() - 1);
    default:
      return {};
  }
}

std::vector<Complex> Gate::local_matrix() const {
  if (arity() > 12) throw ValidationError("local_matrix limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << arity();
  std::vector<Qubit> local(arity());
  for (std::size_t j = 0; j < local.size(); ++j) local[j] = j;
  std::vector<Complex> m(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    Amplitudes col(dim);
    col[c] = 1.0;
    apply_with(col, *this, local);
    std::copy(col.begin(), col.end(), m.begin() + c * dim);
  }
  return m;
}

std::vector<Qubit> all_qubits(std::size_t n) {
  std::vector<Qubit> out(n);
  for (std::size_t q = 0; q < n; ++q) out[q] = q;
  return out;
}

bool is_basis_changing(const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::Hadamard:
      return true;
    case GateKind::Rotation:
    case GateKind::ControlledRotation:
      return std::any_of(gate.angles().begin(), gate.angles().end(),
                         mixes_basis);
    default:
      return false;
  }
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  for (Qubit q : gate.qubits()) {
    if (q >= state.num_qubits()) {
      throw ValidationError("gate " + to_string(gate.kind()) + " targets qubit " +
                            std::to_string(q) + " of a " +
                            std::to_string(state.num_qubits()) +
                            "-qubit register");
    }
  }
  apply_with(detail::StateAccess::amps(state), gate, gate.qubits());
  return state;
}

}  // namespace qtrade
