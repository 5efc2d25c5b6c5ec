#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qtrade {

// Nonnegative weights summing to one. Construction rejects negative entries
// and sums off by more than `tolerance`.
class ProbDist {
 public:
  static constexpr double kDefaultTolerance = 1e-6;

  ProbDist() = default;
  explicit ProbDist(std::vector<double> probs,
                    double tolerance = kDefaultTolerance);
  ProbDist(std::vector<double> probs, std::vector<std::uint64_t> labels,
           double tolerance = kDefaultTolerance);

  std::span<const double> probs() const { return probs_; }
  // Outcome index of each entry; empty when entries are indexed 0..size-1.
  std::span<const std::uint64_t> labels() const { return labels_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  std::size_t argmax() const;

 private:
  std::vector<double> probs_;
  std::vector<std::uint64_t> labels_;
};

}  // namespace qtrade
