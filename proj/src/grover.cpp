#include "qtrade/grover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qtrade/error.hpp"

namespace qtrade {

namespace {

std::size_t ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(v - 1));
}

std::size_t optimal_iterations(std::size_t dim) {
  return static_cast<std::size_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(dim))));
}

std::vector<Qubit> qubit_span(std::size_t begin, std::size_t count) {
  std::vector<Qubit> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = begin + j;
  return out;
}

void add_hadamards(Circuit& c, std::span<const Qubit> qubits) {
  for (Qubit q : qubits) c.add(Gate::hadamard(q));
}

// H bank, -1 on |0...0>, H bank.
void add_diffusion(Circuit& c, const std::vector<Qubit>& reg) {
  add_hadamards(c, reg);
  std::vector<Complex> phases(std::size_t{1} << reg.size(), Complex{1.0, 0.0});
  phases[0] = -1.0;
  c.add(Gate::phase(reg, std::move(phases)));
  add_hadamards(c, reg);
}

double register_probability(const Statevector& s, std::span<const Qubit> reg,
                            std::uint64_t value) {
  double p = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < reg.size(); ++j) v |= ((i >> reg[j]) & 1ULL) << j;
    if (v == value) p += std::norm(s[i]);
  }
  return p;
}

std::size_t default_marked(std::size_t n, std::optional<std::size_t> marked) {
  const std::size_t m = marked.value_or(n - 1);
  if (m >= n) throw ValidationError("marked index out of range");
  return m;
}

}  // namespace

OracleInstance::OracleInstance(std::vector<std::uint8_t> bits, Promise promise)
    : bits_(std::make_shared<const std::vector<std::uint8_t>>(std::move(bits))),
      promise_(promise) {}

OracleInstance OracleInstance::unique_one(std::size_t n, std::size_t marked) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (marked >= n) throw ValidationError("marked index out of range");
  std::vector<std::uint8_t> bits(n, 0);
  bits[marked] = 1;
  return OracleInstance(std::move(bits), Promise::UniqueOne);
}

OracleInstance OracleInstance::all_zero(std::size_t n) {
  if (n < 1) throw ValidationError("n must be at least 1");
  return OracleInstance(std::vector<std::uint8_t>(n, 0), Promise::AllZero);
}

std::optional<std::size_t> OracleInstance::marked() const {
  if (promise_ != Promise::UniqueOne) return std::nullopt;
  const auto b = bits();
  return static_cast<std::size_t>(std::find(b.begin(), b.end(), 1) - b.begin());
}

Statevector oracle_apply(Statevector state, const OracleInstance& instance,
                         std::span<const Qubit> index_register, Qubit flag,
                         QueryCounter& counter) {
  if (std::find(index_register.begin(), index_register.end(), flag) !=
      index_register.end()) {
    throw ValidationError("flag qubit overlaps the index register");
  }
  Statevector out = apply_gate(
      std::move(state),
      Gate::oracle({index_register.begin(), index_register.end()}, flag,
                   instance.shared_bits()));
  counter.record();
  return out;
}

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Standard: return "standard";
    case RunMode::Hybrid: return "hybrid";
    case RunMode::Classical: return "classical";
  }
  return "?";
}

GroverCircuit build_standard_circuit(const OracleInstance& instance,
                                     std::size_t iterations) {
  const std::size_t m = std::max<std::size_t>(1, ceil_log2(instance.n()));
  GroverCircuit g;
  g.block_register = qubit_span(0, m);
  g.index_register = g.block_register;
  g.flag = m;
  g.circuit = Circuit(m + 1);
  g.circuit.add(Gate::pauli_x(g.flag));
  add_hadamards(g.circuit, g.block_register);
  g.circuit.add(Gate::hadamard(g.flag));
  g.iteration_end.push_back(g.circuit.size());
  for (std::size_t it = 0; it < iterations; ++it) {
    g.circuit.add(Gate::oracle(g.index_register, g.flag, instance.shared_bits()));
    add_diffusion(g.circuit, g.block_register);
    g.iteration_end.push_back(g.circuit.size());
  }
  return g;
}

RunReport grover_standard(std::size_t n, std::optional<std::size_t> marked) {
  if (n < 1) throw ValidationError("n must be at least 1");
  RunReport r;
  r.mode = RunMode::Standard;
  r.n = n;
  if (n == 1) {
    // The promise already names the answer.
    r.success_probability = 1.0;
    r.register_dim = 1;
    return r;
  }
  const std::size_t target = default_marked(n, marked);
  const OracleInstance instance = OracleInstance::unique_one(n, target);
  r.register_dim = std::size_t{1} << ceil_log2(n);
  r.iterations = optimal_iterations(r.register_dim);
  const GroverCircuit g = build_standard_circuit(instance, r.iterations);

  QueryCounter counter;
  const Statevector out = simulate(
      g.circuit, Statevector(g.circuit.num_qubits()),
      [&](std::size_t, const Gate& gate, const Statevector&) {
        if (gate.kind() == GateKind::Oracle) counter.record();
      });
  r.queries = counter.count();
  r.layers = count_layers(g.circuit);
  r.success_probability = register_probability(out, g.block_register, target);
  return r;
}

HybridConfig hybrid_config(std::size_t n, std::size_t t_target) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (t_target > n || t_target * t_target < n) {
    throw ValidationError("T_target " + std::to_string(t_target) +
                          " outside [sqrt(n), n] for n = " + std::to_string(n));
  }
  HybridConfig c;
  c.n = n;
  c.t_target = t_target;
  const std::uint64_t n2 = std::uint64_t{n} * n;
  const std::uint64_t t2 = std::uint64_t{t_target} * t_target;
  c.h = std::clamp<std::size_t>(static_cast<std::size_t>((n2 + t2 - 1) / t2), 1, n);
  c.block_size = (n + c.h - 1) / c.h;
  if (c.h == 1) {
    c.register_dim = 1;
    c.iterations = 0;
  } else {
    c.register_dim = std::max<std::size_t>(4, std::bit_ceil(c.h));
    c.iterations = std::max<std::size_t>(1, optimal_iterations(c.register_dim));
  }
  return c;
}

BlockRun simulate_hybrid_blocks(const HybridConfig& config,
                                const OracleInstance& instance,
                                QueryCounter& counter) {
  if (instance.n() != config.n) throw ValidationError("instance size mismatch");
  BlockRun run;
  if (const auto m = instance.marked()) run.marked_block = *m / config.block_size;
  const std::size_t dim = config.register_dim;
  Amplitudes a(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  run.after_iteration.push_back(a);
  for (std::size_t it = 0; it < config.iterations; ++it) {
    // Block test: the block's b bits are queried; with at most one 1 in x,
    // their parity is the block's OR.
    counter.record(config.block_size);
    if (run.marked_block) a[*run.marked_block] = -a[*run.marked_block];
    Complex mean{0.0, 0.0};
    for (const Complex& v : a) mean += v;
    mean /= static_cast<double>(dim);
    for (Complex& v : a) v = 2.0 * mean - v;
    run.after_iteration.push_back(a);
  }
  return run;
}

GroverCircuit build_hybrid_circuit(const HybridConfig& config,
                                   const OracleInstance& instance) {
  if (config.h < 2) throw ValidationError("qubit-level hybrid needs h >= 2");
  const std::size_t d = static_cast<std::size_t>(std::countr_zero(config.register_dim));
  const std::size_t b = config.block_size;
  const std::size_t m = std::max<std::size_t>(1, ceil_log2(config.register_dim * b));
  GroverCircuit g;
  g.block_register = qubit_span(0, d);
  g.index_register = qubit_span(d, m);
  g.flag = d + m;
  g.circuit = Circuit(d + m + 1);

  std::vector<Qubit> both = g.block_register;
  both.insert(both.end(), g.index_register.begin(), g.index_register.end());
  const std::size_t local_dim = std::size_t{1} << (d + m);
  // address[r]: |j>|v> -> |j>|v xor (j b + r)>, its own inverse.
  std::vector<Gate> address;
  for (std::size_t r = 0; r < b; ++r) {
    std::vector<std::uint64_t> image(local_dim);
    for (std::uint64_t local = 0; local < local_dim; ++local) {
      const std::uint64_t j = local & ((std::uint64_t{1} << d) - 1);
      const std::uint64_t v = local >> d;
      image[local] = j | ((v ^ (j * b + r)) << d);
    }
    address.push_back(Gate::basis_permutation(both, std::move(image)));
  }

  g.circuit.add(Gate::pauli_x(g.flag));
  add_hadamards(g.circuit, g.block_register);
  g.circuit.add(Gate::hadamard(g.flag));
  g.iteration_end.push_back(g.circuit.size());
  for (std::size_t it = 0; it < config.iterations; ++it) {
    for (std::size_t r = 0; r < b; ++r) {
      g.circuit.add(address[r]);
      g.circuit.add(Gate::oracle(g.index_register, g.flag, instance.shared_bits()));
      g.circuit.add(address[r]);
    }
    add_diffusion(g.circuit, g.block_register);
    g.iteration_end.push_back(g.circuit.size());
  }
  return g;
}

RunReport hybrid_block(std::size_t n, std::size_t t_target,
                       std::optional<std::size_t> marked) {
  const HybridConfig config = hybrid_config(n, t_target);
  RunReport r;
  r.mode = RunMode::Hybrid;
  r.n = n;
  r.t_target = t_target;
  r.h = config.h;
  r.block_size = config.block_size;
  r.register_dim = config.register_dim;
  r.iterations = config.iterations;
  r.layers = config.layers();

  const std::size_t target = default_marked(n, marked);
  const OracleInstance instance = OracleInstance::unique_one(n, target);
  QueryCounter counter;
  const BlockRun run = simulate_hybrid_blocks(config, instance, counter);
  // Measuring the marked block lets the classical scan find the 1.
  r.success_probability = std::norm(run.after_iteration.back()[*run.marked_block]);
  counter.record(config.block_size);
  r.queries = counter.count();
  return r;
}

RunReport classical_scan(std::size_t n) {
  if (n < 1) throw ValidationError("n must be at least 1");
  RunReport r;
  r.mode = RunMode::Classical;
  r.n = n;
  r.queries = n;
  r.success_probability = 1.0;
  r.register_dim = 1;
  return r;
}

std::vector<RunReport> tradeoff_sweep(std::size_t n,
                                      std::span<const std::size_t> t_targets) {
  for (std::size_t t : t_targets) hybrid_config(n, t);
  std::vector<RunReport> out(t_targets.size());
  const auto count = static_cast<std::int64_t>(t_targets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = hybrid_block(n, t_targets[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string sweep_csv(std::span<const RunReport> reports) {
  std::ostringstream os;
  os << "n,T_target,h,iterations,queries,layers,success_prob,product_over_n\n";
  char line[256];
  for (const RunReport& r : reports) {
    std::snprintf(line, sizeof line, "%zu,%zu,%zu,%zu,%zu,%zu,%.9f,%.6f\n", r.n,
                  r.t_target, r.h, r.iterations, r.queries, r.layers,
                  r.success_probability, r.product_over_n());
    os << line;
  }
  return os.str();
}

}  // namespace qtrade
