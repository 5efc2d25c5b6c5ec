#include "qtrade/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtrade/error.hpp"

namespace qtrade {

namespace {

using nlohmann::json;

constexpr double kIngestTolerance = 1e-6;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

double number_at(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ValidationError(std::string("expected a number for ") + what);
  }
  return j.get<double>();
}

Amplitudes parse_dense(const json& arr) {
  Amplitudes amps;
  amps.reserve(arr.size());
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2) {
      throw ValidationError("dense entries must be [re, im] pairs");
    }
    amps.emplace_back(number_at(e[0], "re"), number_at(e[1], "im"));
  }
  return amps;
}

Amplitudes parse_sparse(const json& arr, std::size_t num_qubits) {
  if (num_qubits == 0) {
    for (const json& e : arr) {
      if (e.contains("bitstring") && e["bitstring"].is_string()) {
        num_qubits = std::max(num_qubits, e["bitstring"].get<std::string>().size());
      }
    }
  }
  if (num_qubits > max_qubits()) {
    throw CapacityError("state of " + std::to_string(num_qubits) +
                        " qubits exceeds the cap of " +
                        std::to_string(max_qubits()));
  }
  Amplitudes amps(std::size_t{1} << num_qubits);
  for (const json& e : arr) {
    if (!e.is_object() || !e.contains("bitstring") || !e["bitstring"].is_string()) {
      throw ValidationError("sparse entries need a \"bitstring\" field");
    }
    const std::string bits = e["bitstring"].get<std::string>();
    if (bits.size() > num_qubits) {
      throw ValidationError("bitstring \"" + bits + "\" is wider than the register");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw ValidationError("bitstring \"" + bits + "\" has a non-binary digit");
      }
      index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    const double re = e.contains("re") ? number_at(e["re"], "re") : 0.0;
    const double im = e.contains("im") ? number_at(e["im"], "im") : 0.0;
    amps[index] += Complex{re, im};
  }
  return amps;
}

}  // namespace

Statevector parse_state(std::string_view text) {
  const json doc = parse_json(text);
  std::size_t num_qubits = 0;
  const json* body = &doc;
  if (doc.is_object()) {
    if (!doc.contains("amplitudes")) {
      throw ValidationError("state document needs an \"amplitudes\" field");
    }
    if (doc.contains("num_qubits")) {
      num_qubits = doc["num_qubits"].get<std::size_t>();
    }
    body = &doc["amplitudes"];
  }
  if (!body->is_array() || body->empty()) {
    throw ValidationError("state amplitudes must be a nonempty array");
  }
  Amplitudes amps = (*body)[0].is_object() ? parse_sparse(*body, num_qubits)
                                           : parse_dense(*body);
  if (num_qubits != 0 && amps.size() != (std::size_t{1} << num_qubits)) {
    throw ValidationError("num_qubits does not match the amplitude count");
  }
  double norm2 = 0.0;
  for (const Complex& a : amps) norm2 += std::norm(a);
  const double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > kIngestTolerance) {
    throw ValidationError("state is not normalized (norm " +
                          std::to_string(norm) + ")");
  }
  for (Complex& a : amps) a /= norm;
  return Statevector::from_amplitudes(std::move(amps));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Statevector read_state_file(const std::filesystem::path& path) {
  return parse_state(read_text_file(path));
}

std::string format_state(const Statevector& state, StateLayout layout) {
  json doc;
  doc["num_qubits"] = state.num_qubits();
  json arr = json::array();
  if (layout == StateLayout::Dense) {
    for (const Complex& a : state.amplitudes()) arr.push_back({a.real(), a.imag()});
  } else {
    const std::size_t n = state.num_qubits();
    for (std::size_t i = 0; i < state.dimension(); ++i) {
      const Complex a = state[i];
      if (a == Complex{0.0, 0.0}) continue;
      std::string bits(n, '0');
      for (std::size_t q = 0; q < n; ++q) {
        if ((i >> q) & 1U) bits[n - 1 - q] = '1';
      }
      arr.push_back({{"bitstring", bits}, {"re", a.real()}, {"im", a.imag()}});
    }
  }
  doc["amplitudes"] = std::move(arr);
  return doc.dump(2) + "\n";
}

ProbDist parse_distribution(std::string_view text) {
  const json doc = parse_json(text);
  const json* body = &doc;
  if (doc.is_object()) {
    if (!doc.contains("probs")) {
      throw ValidationError("distribution document needs a \"probs\" field");
    }
    body = &doc["probs"];
  }
  if (!body->is_array()) throw ValidationError("probabilities must be an array");
  std::vector<double> probs;
  for (const json& e : *body) probs.push_back(number_at(e, "probability"));
  return ProbDist(std::move(probs));
}

ProbDist read_distribution_file(const std::filesystem::path& path) {
  return parse_distribution(read_text_file(path));
}

}  // namespace qtrade
