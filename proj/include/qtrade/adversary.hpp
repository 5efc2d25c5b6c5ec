#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qtrade/grover.hpp"

namespace qtrade {

using BitString = std::vector<std::uint8_t>;

// A hard-input relation R within X x Y for the adversary bounds. X and Y must
// be disjoint and every related pair must differ somewhere.
class Relation {
 public:
  Relation(std::size_t n, std::vector<BitString> xs, std::vector<BitString> ys,
           std::vector<std::pair<std::size_t, std::size_t>> pairs);
  // R = X x Y.
  static Relation product(std::size_t n, std::vector<BitString> xs,
                          std::vector<BitString> ys);
  // Decision version of search: X = {0^n}, Y = {e_i}, R = X x Y.
  static Relation grover_decision(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<BitString>& xs() const { return xs_; }
  const std::vector<BitString>& ys() const { return ys_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  bool is_grover_decision() const { return grover_; }

 private:
  std::size_t n_;
  std::vector<BitString> xs_;
  std::vector<BitString> ys_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  bool grover_ = false;
};

struct AmbainisParams {
  std::size_t m = 0;        // min over x of #related y
  std::size_t m_prime = 0;  // min over y of #related x
  std::size_t l = 0;        // max over x, i of #related y with y_i != x_i
  std::size_t l_prime = 0;
  double bound = 0.0;       // sqrt(m m' / (l l'))
};

// Exhaustive scan; requires |X| |Y| n <= 1e7.
AmbainisParams relation_params(const Relation& rel);

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

// Exact maxima over all size-k coordinate subsets of the fraction of related
// partners differing inside the subset. Subset enumeration is limited to
// n <= 20; the search relation uses the closed form alpha = k/n, beta = 1.
AlphaBeta alpha_beta(const Relation& rel, std::size_t k);
// Enumeration only, without the closed-form shortcut.
AlphaBeta alpha_beta_enumerated(const Relation& rel, std::size_t k);

// Progress indicator p_s = E_{i}[<phi_{0^n} | phi_{e_i}>] of the hybrid
// algorithm at each boundary between classical blocks. p[0] precedes the
// first block; block s (1-based) makes k_s[s-1] queries and its change is
// bounded by bounds[s-1] = 2 sqrt(k_s / n).
struct ProgressTrace {
  HybridConfig config;
  std::vector<double> p;          // real part
  std::vector<double> p_modulus;  // |E <phi_x|phi_y>|
  std::vector<std::size_t> k_s;
  std::vector<double> bounds;
  double success_probability = 0.0;
};

ProgressTrace progress_trace(std::size_t n, std::size_t t_target);

}  // namespace qtrade
