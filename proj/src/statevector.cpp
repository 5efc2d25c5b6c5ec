#include "qtrade/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qtrade/error.hpp"
#include "qtrade/kernels.hpp"

namespace qtrade {

std::size_t max_qubits() {
  if (const char* env = std::getenv("QTRADE_MAX_QUBITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 40) return v;
  }
  return 22;
}

ProbDist::ProbDist(std::vector<double> probs, double tolerance)
    : ProbDist(std::move(probs), {}, tolerance) {}

ProbDist::ProbDist(std::vector<double> probs, std::vector<std::uint64_t> labels,
                   double tolerance)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
  if (probs_.empty()) throw ValidationError("distribution is empty");
  if (!labels_.empty() && labels_.size() != probs_.size()) {
    throw ValidationError("label count does not match probability count");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ValidationError("probability entry is negative or not finite");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(sum) +
                          ", not 1");
  }
}

std::size_t ProbDist::argmax() const {
  return static_cast<std::size_t>(
      std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

Statevector::Statevector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
  if (num_qubits > max_qubits()) {
    throw CapacityError("register of " + std::to_string(num_qubits) +
                        " qubits exceeds the cap of " +
                        std::to_string(max_qubits()));
  }
  amps_[0] = 1.0;
}

Statevector::Statevector(std::size_t num_qubits, Amplitudes amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

Statevector Statevector::basis(std::size_t num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.dimension()) throw ValidationError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::uniform(std::size_t num_qubits) {
  Statevector s(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  std::fill(s.amps_.begin(), s.amps_.end(), Complex{a, 0.0});
  return s;
}

Statevector Statevector::from_amplitudes(Amplitudes amps, double tolerance) {
  if (amps.empty() || !std::has_single_bit(amps.size())) {
    throw ValidationError("amplitude count " + std::to_string(amps.size()) +
                          " is not a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
  if (n > max_qubits()) {
    throw CapacityError("state of " + std::to_string(n) +
                        " qubits exceeds the cap of " +
                        std::to_string(max_qubits()));
  }
  const double norm2 = kernels::omp::norm_squared(amps);
  if (std::abs(std::sqrt(norm2) - 1.0) > tolerance) {
    throw ValidationError("state is not normalized (norm " +
                          std::to_string(std::sqrt(norm2)) + ")");
  }
  return Statevector(n, std::move(amps));
}

double Statevector::norm() const {
  return std::sqrt(kernels::omp::norm_squared(amps_));
}

Statevector Statevector::embedded(std::size_t num_qubits) const {
  if (num_qubits < num_qubits_) {
    throw ValidationError("cannot embed into a narrower register");
  }
  Statevector out(num_qubits);
  std::copy(amps_.begin(), amps_.end(), out.amps_.begin());
  return out;
}

ProbDist measurement_distribution(const Statevector& state) {
  std::vector<double> probs(state.dimension());
  kernels::omp::probabilities(state.amplitudes(), probs);
  return ProbDist(std::move(probs));
}

namespace {
void require_same_dimension(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("dimension mismatch: " +
                          std::to_string(a.dimension()) + " vs " +
                          std::to_string(b.dimension()));
  }
}
}  // namespace

Complex inner_product(const Statevector& a, const Statevector& b) {
  require_same_dimension(a, b);
  return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

double l2_distance(const Statevector& a, const Statevector& b) {
  require_same_dimension(a, b);
  return std::sqrt(kernels::omp::distance_squared(a.amplitudes(), b.amplitudes()));
}

double trace_distance_pure(const Statevector& a, const Statevector& b) {
  const double overlap = std::norm(inner_product(a, b));
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - overlap));
}

}  // namespace qtrade
