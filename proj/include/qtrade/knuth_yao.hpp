#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtrade/prob_dist.hpp"

namespace qtrade {

// Discrete-distribution-generating tree. nodes[0] is the root; an internal
// node's children are reached on coin values 0 and 1.
class DdgTree {
 public:
  struct Node {
    std::size_t depth = 0;
    bool leaf = false;
    std::size_t outcome = 0;            // leaves only
    std::size_t child[2] = {0, 0};      // internal nodes only
  };

  std::span<const Node> nodes() const { return nodes_; }
  std::size_t precision_bits() const { return precision_bits_; }
  std::size_t num_outcomes() const { return masses_.size(); }
  // Mass of outcome i in units of 2^-precision_bits, after truncation and the
  // leftover assignment.
  std::span<const std::uint64_t> scaled_masses() const { return masses_; }

 private:
  friend DdgTree build_ddg(const ProbDist& d, std::size_t precision_bits);
  std::vector<Node> nodes_;
  std::vector<std::uint64_t> masses_;
  std::size_t precision_bits_ = 0;
};

// Truncates each p_i to `precision_bits` binary digits and gives the leftover
// to the most likely outcome. At depth s there is one leaf for outcome i per
// set s-th digit, placed in ascending outcome order; other nodes branch.
DdgTree build_ddg(const ProbDist& d, std::size_t precision_bits);

// sum over leaves of depth * 2^-depth
double expected_flips(const DdgTree& tree);

class BitSourceExhausted : public std::runtime_error {
 public:
  BitSourceExhausted() : std::runtime_error("bit source exhausted") {}
};

class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual bool next_bit() = 0;
};

// Unbiased bits from a seeded 64-bit Mersenne twister.
class RandomBitSource final : public BitSource {
 public:
  explicit RandomBitSource(std::uint64_t seed) : rng_(seed) {}
  bool next_bit() override;

 private:
  std::mt19937_64 rng_;
  std::uint64_t buffer_ = 0;
  int remaining_ = 0;
};

// A fixed bit sequence; throws BitSourceExhausted past its end.
class SequenceBitSource final : public BitSource {
 public:
  explicit SequenceBitSource(std::vector<bool> bits) : bits_(std::move(bits)) {}
  bool next_bit() override;

 private:
  std::vector<bool> bits_;
  std::size_t pos_ = 0;
};

struct DdgSample {
  std::size_t outcome = 0;
  std::size_t bits_used = 0;
};

DdgSample sample(const DdgTree& tree, BitSource& bits);

// One line per node, indented by depth: "leaf depth=2 outcome=1" or "node".
std::string dump_tree(const DdgTree& tree);

}  // namespace qtrade
