#include <gtest/gtest.h>

#include <cmath>

#include "qtrade/adversary.hpp"
#include "qtrade/error.hpp"

using namespace qtrade;

TEST(Adversary, GroverRelationBound) {
  for (std::size_t n : {4u, 16u, 64u}) {
    const auto p = relation_params(Relation::grover_decision(n));
    EXPECT_EQ(p.m, n);
    EXPECT_EQ(p.m_prime, 1u);
    EXPECT_EQ(p.l, 1u);
    EXPECT_EQ(p.l_prime, 1u);
    EXPECT_DOUBLE_EQ(p.bound, std::sqrt(static_cast<double>(n)));
  }
}

TEST(Adversary, ProductRelationNeedsDistinctStrings) {
  const BitString a{0, 0}, b{0, 0};
  EXPECT_THROW(Relation::product(2, {a}, {b}), ValidationError);
  EXPECT_THROW(Relation::product(2, {BitString{0, 2}}, {BitString{1, 1}}), ValidationError);
  EXPECT_THROW(relation_params(Relation(2, {a}, {BitString{1, 1}}, {})), ValidationError);
}

TEST(Adversary, ParityStyleRelation) {
  // X: weight-0 strings, Y: weight-2 strings on 3 bits.
  const std::vector<BitString> xs{{0, 0, 0}};
  const std::vector<BitString> ys{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const auto p = relation_params(Relation::product(3, xs, ys));
  EXPECT_EQ(p.m, 3u);
  EXPECT_EQ(p.m_prime, 1u);
  EXPECT_EQ(p.l, 2u);
  EXPECT_EQ(p.l_prime, 1u);
  EXPECT_NEAR(p.bound, std::sqrt(1.5), 1e-15);
}

TEST(Adversary, AlphaBetaClosedFormMatchesEnumeration) {
  for (std::size_t n : {4u, 8u, 12u}) {
    const auto rel = Relation::grover_decision(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto a = alpha_beta(rel, k);
      const auto b = alpha_beta_enumerated(rel, k);
      EXPECT_NEAR(a.alpha, static_cast<double>(k) / n, 1e-15);
      EXPECT_DOUBLE_EQ(a.beta, 1.0);
      EXPECT_NEAR(a.alpha, b.alpha, 1e-15);
      EXPECT_NEAR(a.beta, b.beta, 1e-15);
    }
  }
  EXPECT_THROW(alpha_beta_enumerated(Relation::grover_decision(21), 2), CapacityError);
}

TEST(Adversary, ProgressTraceBounds) {
  for (std::size_t n : {16u, 32u}) {
    for (std::size_t t = 1; t <= n; ++t) {
      if (t * t < n) continue;
      const auto tr = progress_trace(n, t);
      ASSERT_EQ(tr.p.size(), tr.k_s.size() + 1);
      EXPECT_NEAR(tr.p.front(), 1.0, 1e-12);
      std::size_t total = 0;
      for (std::size_t s = 0; s < tr.k_s.size(); ++s) {
        total += tr.k_s[s];
        EXPECT_NEAR(tr.bounds[s], 2.0 * std::sqrt(static_cast<double>(tr.k_s[s]) / n), 1e-15);
        EXPECT_LE(std::abs(tr.p[s + 1] - tr.p[s]), tr.bounds[s] + 1e-9) << n << " " << t;
      }
      EXPECT_EQ(total, tr.config.queries());
      if (tr.success_probability >= 2.0 / 3) EXPECT_LE(tr.p.back(), 0.95);
    }
  }
}

TEST(Adversary, CapacityCheck) {
  std::vector<BitString> xs, ys;
  for (int i = 0; i < 400; ++i) {
    BitString x(200, 0), y(200, 1);
    x[i % 200] = 1;
    x[(i / 200) + 100] = 1;
    xs.push_back(x);
    y[i % 200] = 0;
    y[(i / 200) + 100] = 0;
    ys.push_back(y);
  }
  EXPECT_THROW(Relation::product(200, xs, ys), CapacityError);
}
