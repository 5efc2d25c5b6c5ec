#include "qtrade/knuth_yao.hpp"

#include <cmath>
#include <sstream>

#include "qtrade/error.hpp"

namespace qtrade {

DdgTree build_ddg(const ProbDist& d, std::size_t precision_bits) {
  if (precision_bits < 1 || precision_bits > 62) {
    throw ValidationError("precision_bits must lie in [1, 62]");
  }
  const std::uint64_t one = std::uint64_t{1} << precision_bits;
  DdgTree tree;
  tree.precision_bits_ = precision_bits;
  tree.masses_.resize(d.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double scaled = std::floor(std::ldexp(d[i], static_cast<int>(precision_bits)));
    tree.masses_[i] = std::min(static_cast<std::uint64_t>(scaled), one);
    total += tree.masses_[i];
  }
  if (total == 0) {
    throw ValidationError("precision too small to represent any probability mass");
  }
  if (total > one) {
    // Only reachable through the 1e-6 sum tolerance; shave the excess off the
    // largest outcome.
    tree.masses_[d.argmax()] -= total - one;
  } else {
    tree.masses_[d.argmax()] += one - total;
  }

  tree.nodes_.push_back({});
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (tree.masses_[i] == one) {
      tree.nodes_[0].leaf = true;
      tree.nodes_[0].outcome = i;
      return tree;
    }
  }

  std::vector<std::size_t> frontier = {0};
  for (std::size_t s = 1; s <= precision_bits && !frontier.empty(); ++s) {
    const std::uint64_t digit = std::uint64_t{1} << (precision_bits - s);
    std::vector<std::size_t> slots;
    slots.reserve(2 * frontier.size());
    for (std::size_t parent : frontier) {
      for (int b = 0; b < 2; ++b) {
        tree.nodes_[parent].child[b] = tree.nodes_.size();
        slots.push_back(tree.nodes_.size());
        tree.nodes_.push_back({s, false, 0, {0, 0}});
      }
    }
    std::size_t used = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!(tree.masses_[i] & digit)) continue;
      DdgTree::Node& leaf = tree.nodes_[slots[used++]];
      leaf.leaf = true;
      leaf.outcome = i;
    }
    frontier.assign(slots.begin() + static_cast<std::ptrdiff_t>(used), slots.end());
  }
  return tree;
}

double expected_flips(const DdgTree& tree) {
  double e = 0.0;
  for (const auto& node : tree.nodes()) {
    if (node.leaf) {
      e += static_cast<double>(node.depth) * std::ldexp(1.0, -static_cast<int>(node.depth));
    }
  }
  return e;
}

bool RandomBitSource::next_bit() {
  if (remaining_ == 0) {
    buffer_ = rng_();
    remaining_ = 64;
  }
  const bool bit = buffer_ & 1U;
  buffer_ >>= 1;
  --remaining_;
  return bit;
}

bool SequenceBitSource::next_bit() {
  if (pos_ >= bits_.size()) throw BitSourceExhausted();
  return bits_[pos_++];
}

DdgSample sample(const DdgTree& tree, BitSource& bits) {
  DdgSample out;
  std::size_t at = 0;
  const auto nodes = tree.nodes();
  while (!nodes[at].leaf) {
    at = nodes[at].child[bits.next_bit() ? 1 : 0];
    ++out.bits_used;
  }
  out.outcome = nodes[at].outcome;
  return out;
}

std::string dump_tree(const DdgTree& tree) {
  std::ostringstream os;
  const auto nodes = tree.nodes();
  std::vector<std::size_t> stack = {0};
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    const auto& node = nodes[at];
    os << std::string(2 * node.depth, ' ');
    if (node.leaf) {
      os << "leaf depth=" << node.depth << " outcome=" << node.outcome << '\n';
    } else {
      os << "node depth=" << node.depth << '\n';
      stack.push_back(node.child[1]);
      stack.push_back(node.child[0]);
    }
  }
  return os.str();
}

}  // namespace qtrade
