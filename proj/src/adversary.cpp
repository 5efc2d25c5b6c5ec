#include "qtrade/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "qtrade/error.hpp"

namespace qtrade {

namespace {

constexpr double kFeasibleWork = 1e7;
constexpr std::size_t kMaxEnumeratedBits = 20;

std::uint32_t diff_mask(const BitString& a, const BitString& b) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

// max over |s| = k of the fraction of `masks` that intersect s.
double best_subset_fraction(const std::vector<std::uint32_t>& masks,
                            std::size_t n, std::size_t k) {
  if (masks.empty()) return 0.0;
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Gosper's hack over all k-subsets of n bits.
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    std::size_t hit = 0;
    for (std::uint32_t m : masks) hit += (m & s) != 0;
    best = std::max(best, hit);
    if (best == masks.size()) break;
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return static_cast<double>(best) / static_cast<double>(masks.size());
}

}  // namespace

Relation::Relation(std::size_t n, std::vector<BitString> xs, std::vector<BitString> ys,
                   std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : n_(n), xs_(std::move(xs)), ys_(std::move(ys)), pairs_(std::move(pairs)) {
  const double work = static_cast<double>(xs_.size()) *
                      static_cast<double>(ys_.size()) * static_cast<double>(n_);
  if (work > kFeasibleWork) {
    throw CapacityError("relation too large for exhaustive scan");
  }
  for (const auto* side : {&xs_, &ys_}) {
    for (const BitString& s : *side) {
      if (s.size() != n_) throw ValidationError("bit string length differs from n");
      for (auto b : s) {
        if (b > 1) throw ValidationError("bit strings hold 0/1 entries only");
      }
    }
  }
  const std::set<BitString> x_set(xs_.begin(), xs_.end());
  for (const BitString& y : ys_) {
    if (x_set.count(y)) throw ValidationError("X and Y must be disjoint");
  }
  for (const auto& [xi, yi] : pairs_) {
    if (xi >= xs_.size() || yi >= ys_.size()) {
      throw ValidationError("relation pair index out of range");
    }
    if (xs_[xi] == ys_[yi]) throw ValidationError("related strings must differ");
  }
}

Relation Relation::product(std::size_t n, std::vector<BitString> xs,
                           std::vector<BitString> ys) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) pairs.emplace_back(i, j);
  }
  return Relation(n, std::move(xs), std::move(ys), std::move(pairs));
}

Relation Relation::grover_decision(std::size_t n) {
  if (n < 1) throw ValidationError("n must be at least 1");
  std::vector<BitString> ys;
  for (std::size_t i = 0; i < n; ++i) {
    BitString e(n, 0);
    e[i] = 1;
    ys.push_back(std::move(e));
  }
  Relation rel = product(n, {BitString(n, 0)}, std::move(ys));
  rel.grover_ = true;
  return rel;
}

AmbainisParams relation_params(const Relation& rel) {
  if (rel.pairs().empty()) throw ValidationError("relation is empty");
  const std::size_t n = rel.n();
  std::vector<std::size_t> deg_x(rel.xs().size(), 0);
  std::vector<std::size_t> deg_y(rel.ys().size(), 0);
  std::vector<std::size_t> split_x(rel.xs().size() * n, 0);
  std::vector<std::size_t> split_y(rel.ys().size() * n, 0);
  for (const auto& [xi, yi] : rel.pairs()) {
    ++deg_x[xi];
    ++deg_y[yi];
    const BitString& x = rel.xs()[xi];
    const BitString& y = rel.ys()[yi];
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] != y[i]) {
        ++split_x[xi * n + i];
        ++split_y[yi * n + i];
      }
    }
  }
  AmbainisParams p;
  p.m = *std::min_element(deg_x.begin(), deg_x.end());
  p.m_prime = *std::min_element(deg_y.begin(), deg_y.end());
  p.l = *std::max_element(split_x.begin(), split_x.end());
  p.l_prime = *std::max_element(split_y.begin(), split_y.end());
  p.bound = std::sqrt(static_cast<double>(p.m) * static_cast<double>(p.m_prime) /
                      (static_cast<double>(p.l) * static_cast<double>(p.l_prime)));
  return p;
}

AlphaBeta alpha_beta_enumerated(const Relation& rel, std::size_t k) {
  const std::size_t n = rel.n();
  if (k > n) throw ValidationError("k exceeds n");
  if (n > kMaxEnumeratedBits) {
    throw CapacityError("subset enumeration limited to n <= " +
                        std::to_string(kMaxEnumeratedBits));
  }
  AlphaBeta ab;
  if (k == 0) return ab;
  std::vector<std::vector<std::uint32_t>> by_x(rel.xs().size());
  std::vector<std::vector<std::uint32_t>> by_y(rel.ys().size());
  for (const auto& [xi, yi] : rel.pairs()) {
    const std::uint32_t m = diff_mask(rel.xs()[xi], rel.ys()[yi]);
    by_x[xi].push_back(m);
    by_y[yi].push_back(m);
  }
  for (const auto& masks : by_x) ab.alpha = std::max(ab.alpha, best_subset_fraction(masks, n, k));
  for (const auto& masks : by_y) ab.beta = std::max(ab.beta, best_subset_fraction(masks, n, k));
  return ab;
}

AlphaBeta alpha_beta(const Relation& rel, std::size_t k) {
  if (!rel.is_grover_decision()) return alpha_beta_enumerated(rel, k);
  if (k > rel.n()) throw ValidationError("k exceeds n");
  // X = {0^n}: y = e_i differs only at i, so a k-subset catches exactly k of
  // the n partners; each y has the single partner 0^n, caught whenever i in s.
  if (k == 0) return {};
  return {static_cast<double>(k) / static_cast<double>(rel.n()), 1.0};
}

ProgressTrace progress_trace(std::size_t n, std::size_t t_target) {
  ProgressTrace trace;
  trace.config = hybrid_config(n, t_target);
  const HybridConfig& cfg = trace.config;
  const std::size_t iters = cfg.iterations;

  if (cfg.h == 1) {
    trace.k_s = {cfg.block_size};
  } else {
    trace.k_s.push_back(0);
    for (std::size_t it = 0; it < iters; ++it) {
      trace.k_s.push_back(cfg.block_size);
      trace.k_s.push_back(0);
    }
    trace.k_s.push_back(cfg.block_size);
  }
  const Relation rel = Relation::grover_decision(n);
  for (std::size_t k : trace.k_s) {
    const AlphaBeta ab = alpha_beta(rel, k);
    trace.bounds.push_back(2.0 * std::sqrt(ab.alpha * ab.beta));
  }

  QueryCounter zero_counter;
  const BlockRun x_run = simulate_hybrid_blocks(cfg, OracleInstance::all_zero(n), zero_counter);

  // Per-oracle overlaps, summed afterwards in index order.
  const std::size_t points = trace.k_s.size() + 1;
  std::vector<std::vector<Complex>> overlaps(n, std::vector<Complex>(points));
  std::vector<double> success(n, 0.0);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    QueryCounter counter;
    const BlockRun y_run = simulate_hybrid_blocks(cfg, OracleInstance::unique_one(n, i), counter);
    auto dot = [&](std::size_t it, std::optional<std::size_t> skip) {
      const Amplitudes& a = x_run.after_iteration[it];
      const Amplitudes& b = y_run.after_iteration[it];
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (skip && *skip == j) continue;
        acc += std::conj(a[j]) * b[j];
      }
      return acc;
    };
    std::vector<Complex>& row = overlaps[i];
    row[0] = dot(0, std::nullopt);
    std::size_t at = 1;
    if (cfg.h != 1) {
      row[at++] = dot(0, std::nullopt);
      for (std::size_t it = 1; it <= iters; ++it) {
        row[at++] = dot(it, std::nullopt);
        row[at++] = dot(it, std::nullopt);
      }
    }
    // The final scan copies the addressed block's bits into a workspace; that
    // record differs from the all-zero run exactly on the marked block.
    row[at] = dot(iters, y_run.marked_block);
    success[i] = std::norm(y_run.after_iteration.back()[*y_run.marked_block]);
  }

  for (std::size_t s = 0; s < points; ++s) {
    Complex mean{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) mean += overlaps[i][s];
    mean /= static_cast<double>(n);
    trace.p.push_back(mean.real());
    trace.p_modulus.push_back(std::abs(mean));
  }
  double total = 0.0;
  for (double v : success) total += v;
  trace.success_probability = total / static_cast<double>(n);
  return trace;
}

}  // namespace qtrade
