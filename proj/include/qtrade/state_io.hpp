#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qtrade/prob_dist.hpp"
#include "qtrade/statevector.hpp"

namespace qtrade {

// State documents are JSON, in one of two layouts:
//   dense:  [[re, im], ...] with 2^n entries
//   sparse: [{"bitstring": "0101", "re": 0.5, "im": 0.0}, ...]
// Either may be wrapped as {"num_qubits": n, "amplitudes": <layout>}.
// Bitstrings are written most significant qubit first; unlisted entries are
// zero. Ingested states are renormalized if within 1e-6 of unit norm.
enum class StateLayout { Dense, Sparse };

Statevector parse_state(std::string_view text);
Statevector read_state_file(const std::filesystem::path& path);
std::string format_state(const Statevector& state,
                         StateLayout layout = StateLayout::Sparse);

// Distribution documents: [p0, p1, ...] or {"probs": [...]}.
ProbDist parse_distribution(std::string_view text);
ProbDist read_distribution_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qtrade
