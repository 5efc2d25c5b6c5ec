#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qtrade/entropy.hpp"
#include "qtrade/error.hpp"
#include "qtrade/knuth_yao.hpp"

using namespace qtrade;

namespace {

ProbDist random_dist(std::size_t k, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(k);
  double s = 0.0;
  for (auto& x : p) s += (x = e(rng));
  for (auto& x : p) x /= s;
  return ProbDist(p);
}

// Leaf mass per outcome, read back from the tree.
std::vector<double> leaf_mass(const DdgTree& t) {
  std::vector<double> m(t.num_outcomes(), 0.0);
  for (const auto& n : t.nodes()) {
    if (n.leaf) m[n.outcome] += std::ldexp(1.0, -static_cast<int>(n.depth));
  }
  return m;
}

}  // namespace

TEST(KnuthYao, DyadicIsExact) {
  const ProbDist d({0.5, 0.25, 0.125, 0.125});
  const auto t = build_ddg(d, 32);
  EXPECT_NEAR(expected_flips(t), shannon_entropy(d), 1e-12);
  EXPECT_NEAR(expected_flips(t), 1.75, 1e-12);
}

TEST(KnuthYao, ThirdsMatchSeriesValue) {
  // 1/3 = 0.010101..., 2/3 = 0.101010...; one leaf at every depth, so the
  // expected depth tends to 2 as precision grows.
  const auto t = build_ddg(ProbDist({1.0 / 3, 2.0 / 3}), 40);
  EXPECT_NEAR(expected_flips(t), 2.0, 1e-9);
}

TEST(KnuthYao, PointMassIsRootLeaf) {
  const auto t = build_ddg(ProbDist({0.0, 1.0}), 16);
  ASSERT_EQ(t.nodes().size(), 1u);
  EXPECT_TRUE(t.nodes()[0].leaf);
  EXPECT_EQ(t.nodes()[0].outcome, 1u);
  EXPECT_EQ(expected_flips(t), 0.0);
}

TEST(KnuthYao, Validation) {
  EXPECT_THROW(build_ddg(ProbDist({0.5, 0.5}), 0), ValidationError);
  EXPECT_THROW(build_ddg(ProbDist({0.5, 0.5}), 63), ValidationError);
}

TEST(KnuthYao, LeafMassesMatchTruncation) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_dist(2 + i, rng);
    const std::size_t bits = 20;
    const auto t = build_ddg(d, bits);
    const auto m = leaf_mass(t);
    double total = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      total += m[j];
      EXPECT_NEAR(m[j], std::ldexp(static_cast<double>(t.scaled_masses()[j]), -20), 1e-15);
      if (j != d.argmax()) {
        EXPECT_LE(m[j], d[j]);
        EXPECT_GT(m[j], d[j] - std::ldexp(1.0, -20));
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-15);
  }
}

TEST(KnuthYao, EntropySandwich) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_dist(1 + i % 64, rng);
    const auto t = build_ddg(d, 32);
    const double h = shannon_entropy(d);
    EXPECT_GE(expected_flips(t), h - 1e-3);
    EXPECT_LE(expected_flips(t), h + 2.0);
  }
}

TEST(KnuthYao, SequenceSampling) {
  const auto t = build_ddg(ProbDist({0.5, 0.25, 0.25}), 8);
  SequenceBitSource a({false});
  EXPECT_EQ(sample(t, a).outcome, 0u);
  SequenceBitSource b({true, false});
  const auto s = sample(t, b);
  EXPECT_EQ(s.outcome, 1u);
  EXPECT_EQ(s.bits_used, 2u);
  SequenceBitSource c({true});
  EXPECT_THROW(sample(t, c), BitSourceExhausted);
}

TEST(KnuthYao, SamplingFrequenciesPassChiSquare) {
  const ProbDist d({0.1, 0.2, 0.3, 0.15, 0.25});
  const auto t = build_ddg(d, 32);
  RandomBitSource bits(7);
  const std::size_t n = 100000;
  std::vector<double> counts(d.size(), 0.0);
  double used = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = sample(t, bits);
    counts[s.outcome] += 1;
    used += s.bits_used;
  }
  double chi2 = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double e = n * d[j];
    chi2 += (counts[j] - e) * (counts[j] - e) / e;
  }
  // 4 degrees of freedom; 18.47 is the 0.999 quantile.
  EXPECT_LT(chi2, 18.47);
  EXPECT_NEAR(used / n, expected_flips(t), 0.05);
}

TEST(KnuthYao, RandomBitsAreSeeded) {
  RandomBitSource a(3), b(3);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(a.next_bit(), b.next_bit());
}

TEST(KnuthYao, DumpTree) {
  const auto text = dump_tree(build_ddg(ProbDist({0.5, 0.5}), 4));
  EXPECT_EQ(text, "node depth=0\n  leaf depth=1 outcome=0\n  leaf depth=1 outcome=1\n");
}
