#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtrade/circuit.hpp"
#include "qtrade/statevector.hpp"

namespace qtrade {

enum class Promise { UniqueOne, AllZero };

// Input string x of a search instance, visible only through the oracle.
class OracleInstance {
 public:
  static OracleInstance unique_one(std::size_t n, std::size_t marked);
  static OracleInstance all_zero(std::size_t n);

  std::size_t n() const { return bits_->size(); }
  Promise promise() const { return promise_; }
  std::span<const std::uint8_t> bits() const { return *bits_; }
  std::shared_ptr<const std::vector<std::uint8_t>> shared_bits() const { return bits_; }
  // Index of the 1 for unique-one instances.
  std::optional<std::size_t> marked() const;

 private:
  OracleInstance(std::vector<std::uint8_t> bits, Promise promise);
  std::shared_ptr<const std::vector<std::uint8_t>> bits_;
  Promise promise_;
};

// Counts oracle applications of one run.
class QueryCounter {
 public:
  void record(std::size_t queries = 1) { count_ += queries; }
  std::size_t count() const { return count_; }

 private:
  std::size_t count_ = 0;
};

// |i, b> -> |i, b xor x_i> on (index_register, flag); index values >= n are
// left alone. Records one query.
Statevector oracle_apply(Statevector state, const OracleInstance& instance,
                         std::span<const Qubit> index_register, Qubit flag,
                         QueryCounter& counter);

enum class RunMode { Standard, Hybrid, Classical };
std::string to_string(RunMode mode);

struct RunReport {
  RunMode mode = RunMode::Standard;
  std::size_t n = 0;
  std::size_t t_target = 0;     // hybrid only
  std::size_t queries = 0;
  std::size_t layers = 0;       // basis-changing layers
  double success_probability = 0.0;
  std::size_t h = 0;            // blocks, hybrid only
  std::size_t block_size = 0;   // hybrid only
  std::size_t register_dim = 0; // entries of the searched register
  std::size_t iterations = 0;

  double product_over_n() const {
    return static_cast<double>(queries) * static_cast<double>(layers) /
           static_cast<double>(n);
  }
};

// Qubit-level Grover on ceil(log2 n) index qubits plus a flag in |->:
// X(flag), H bank, then per iteration oracle, H bank, phase flip on |0>,
// H bank.
struct GroverCircuit {
  Circuit circuit;
  std::vector<Qubit> block_register;  // searched register (block index)
  std::vector<Qubit> index_register;  // oracle address register
  Qubit flag = 0;
  // Gate count at the end of the initial layer and of every iteration.
  std::vector<std::size_t> iteration_end;
};

GroverCircuit build_standard_circuit(const OracleInstance& instance,
                                     std::size_t iterations);

// floor(pi/4 sqrt(N)) iterations with N = 2^ceil(log2 n). Success is the
// probability of measuring the marked index (default n - 1).
RunReport grover_standard(std::size_t n, std::optional<std::size_t> marked = {});

// Block hybrid: h = ceil((n/T)^2) clamped to [1, n] blocks of
// b = ceil(n/h) bits; Grover over a padded register of
// D = max(4, 2^ceil(log2 h)) block indices (empty blocks never marked) with
// floor(pi/4 sqrt(D)) iterations, each block test costing b queries; then a
// classical scan of the measured block (b queries). h = 1 is a plain scan.
struct HybridConfig {
  std::size_t n = 0;
  std::size_t t_target = 0;
  std::size_t h = 0;
  std::size_t block_size = 0;
  std::size_t register_dim = 0;  // 1 when h = 1
  std::size_t iterations = 0;

  std::size_t layers() const { return h == 1 ? 0 : 2 * iterations + 1; }
  std::size_t queries() const { return iterations * block_size + block_size; }
};

// Throws ValidationError unless sqrt(n) <= T_target <= n.
HybridConfig hybrid_config(std::size_t n, std::size_t t_target);

// Block-register amplitudes of one hybrid run, before the final scan.
struct BlockRun {
  std::vector<Amplitudes> after_iteration;  // [0] is the initial uniform state
  std::optional<std::size_t> marked_block;
};

BlockRun simulate_hybrid_blocks(const HybridConfig& config,
                                const OracleInstance& instance,
                                QueryCounter& counter);

// The same algorithm at qubit level (block register, address register, flag);
// block tests are b address/oracle/unaddress rounds with phase kickback.
GroverCircuit build_hybrid_circuit(const HybridConfig& config,
                                   const OracleInstance& instance);

RunReport hybrid_block(std::size_t n, std::size_t t_target,
                       std::optional<std::size_t> marked = {});

RunReport classical_scan(std::size_t n);

// One hybrid report per target, in input order.
std::vector<RunReport> tradeoff_sweep(std::size_t n,
                                      std::span<const std::size_t> t_targets);

// Header n,T_target,h,iterations,queries,layers,success_prob,product_over_n.
std::string sweep_csv(std::span<const RunReport> reports);

}  // namespace qtrade
