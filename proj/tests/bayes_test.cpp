#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mim/bayes.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace mim {
namespace {

namespace frozen = testing::frozen;

TEST(Hypotheses, Validation) {
  EXPECT_THROW(GaussianHypothesis(0.0, 0.0), Error);
  EXPECT_THROW(GaussianHypothesis(NAN, 1.0), Error);
  const GaussianHypothesis h{0.0, 1.0};
  EXPECT_THROW(HypothesisEnsemble({1.0}, {h}), Error);
  EXPECT_THROW(HypothesisEnsemble({0.5, 0.5}, {h}), Error);
  EXPECT_THROW(HypothesisEnsemble({0.5, 0.6}, {h, h}), Error);
  EXPECT_THROW(HypothesisEnsemble({0.5, 0.5}, {h, h}, 2), Error);
  EXPECT_NO_THROW(HypothesisEnsemble({0.5, 0.5}, {h, h}, 1));
}

TEST(KAlpha, Examples) {
  EXPECT_NEAR(k_alpha(0.5, 0.5, 2.0), std::log(0.5) - 0.5, 1e-15);
  EXPECT_NEAR(k_alpha(0.5, 0.5, 2.0), frozen::kKHalfHalfBeta2, 1e-12);
  EXPECT_NEAR(k_alpha(0.3, 0.2, 0.0), 0.3 * std::log(0.2) + 0.7 * std::log(0.8), 1e-15);
  EXPECT_NEAR(k_alpha(0.5, 0.5, 0.0), std::log(0.5), 1e-15);
  EXPECT_THROW(k_alpha(0.0, 0.5, 1.0), Error);
  EXPECT_THROW(k_alpha(0.5, 1.0, 1.0), Error);
  EXPECT_THROW(k_alpha(0.5, 0.5, -1.0), Error);
}

TEST(OptimalAlpha, Examples) {
  for (double beta : {0.1, 2.0, 30.0}) {
    const auto e = optimal_alpha_gaussian(0.5, beta);
    EXPECT_DOUBLE_EQ(e.alpha, 0.5);
    EXPECT_FALSE(e.clamped);
  }
  const auto skewed = optimal_alpha_gaussian(0.1, 2.0);
  EXPECT_TRUE(skewed.clamped);
  EXPECT_DOUBLE_EQ(skewed.alpha, 1.0 - kChernoffEpsilon);
  // the grid minimum of K over (0, 1) sits at the right end too
  double best_alpha = 0.0;
  double best = INFINITY;
  for (int k = 1; k < 10000; ++k) {
    const double a = k / 10000.0;
    if (k_alpha(a, 0.1, 2.0) < best) {
      best = k_alpha(a, 0.1, 2.0);
      best_alpha = a;
    }
  }
  EXPECT_DOUBLE_EQ(best_alpha, 0.9999);
  EXPECT_THROW(optimal_alpha_gaussian(0.5, 0.0), Error);
}

TEST(OptimalAlpha, MinorityPriorPushesAlphaAboveHalf) {
  testing::Generator gen(12);
  for (int i = 0; i < 200; ++i) {
    const double w0 = gen.real(0.01, 0.499);
    const auto e = optimal_alpha_gaussian(w0, gen.real(0.1, 50.0));
    if (!e.clamped) {
      EXPECT_GT(e.alpha, 0.5);
    }
  }
}

TEST(Chernoff, SymmetricExample) {
  const GaussianHypothesis h0{0.0, 1.0};
  const GaussianHypothesis h1{2.0, 1.0};
  EXPECT_NEAR(chernoff_bound_gaussian(0.5, h0, h1), frozen::kChernoffHalfBeta2, 1e-12);
  EXPECT_NEAR(chernoff_bound_gaussian(0.5, h0, h1), 0.30326, 1e-5);
  EXPECT_NEAR(bayes_error_oracle_binary(0.5, h0, h1), frozen::kQOfOne, 1e-10);
}

TEST(Chernoff, IdenticalHypothesesDegenerateToHalf) {
  const GaussianHypothesis h{0.0, 1.0};
  EXPECT_NEAR(chernoff_bound_gaussian(0.5, h, h), 0.5, 1e-12);
  EXPECT_NEAR(chernoff_bound_gaussian(0.2, h, h), 0.2, 1e-9);
  EXPECT_NEAR(bayes_error_oracle_binary(0.2, h, h), 0.2, 1e-10);
  EXPECT_NEAR(bayes_error_oracle_binary(0.5, h, h), 0.5, 1e-10);
}

TEST(Chernoff, UnequalSigmasRejected) {
  try {
    chernoff_bound_gaussian(0.5, {0.0, 1.0}, {1.0, 2.0});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModelMismatch);
  }
}

TEST(Chernoff, SkewedPriorOracleBelowBound) {
  const GaussianHypothesis h0{0.0, 1.0};
  const GaussianHypothesis h1{2.0, 1.0};
  EXPECT_LE(bayes_error_oracle_binary(0.1, h0, h1), chernoff_bound_gaussian(0.1, h0, h1));
}

TEST(BayesProperties, OracleMatchesClosedFormAndStaysBelowBound) {
  testing::Generator gen(2024);
  for (int i = 0; i < 200; ++i) {
    const double w0 = gen.real(0.001, 0.999);
    const double mu0 = gen.real(-5.0, 5.0);
    const double mu1 = gen.real(-5.0, 5.0);
    const double sigma = gen.real(0.2, 3.0);
    const GaussianHypothesis h0{mu0, sigma};
    const GaussianHypothesis h1{mu1, sigma};
    const double oracle = bayes_error_oracle_binary(w0, h0, h1);
    const double bound = chernoff_bound_gaussian(w0, h0, h1);
    EXPECT_NEAR(oracle, testing::bayes_error_closed_form(w0, mu0, mu1, sigma), 1e-6);
    EXPECT_LE(oracle, bound);
    EXPECT_LE(bound, std::min(w0, 1.0 - w0) + 1e-9);
    // swapping the roles of the two classes changes nothing
    EXPECT_NEAR(bayes_error_oracle_binary(1.0 - w0, h1, h0), oracle, 1e-10);
    EXPECT_NEAR(chernoff_bound_gaussian(1.0 - w0, h1, h0), bound, 1e-10);
  }
}

TEST(BayesProperties, ClosedFormAlphaMatchesGoldenSection) {
  testing::Generator gen(77);
  int checked = 0;
  while (checked < 200) {
    const double w0 = gen.real(0.01, 0.99);
    const double beta = gen.real(0.05, 20.0);
    const auto e = optimal_alpha_gaussian(w0, beta);
    if (e.clamped) continue;
    const auto m = numerics::golden_section_minimize([&](double a) { return k_alpha(a, w0, beta); },
                                                     kChernoffEpsilon, 1.0 - kChernoffEpsilon, 1e-10);
    EXPECT_LT(std::abs(k_alpha(e.alpha, w0, beta) - m.value), 1e-8);
    ++checked;
  }
}

TEST(BayesProperties, OracleNonIncreasingInSeparation) {
  for (double w0 : {0.05, 0.3, 0.5}) {
    double prev = 1.0;
    for (double gap = 0.0; gap <= 8.0; gap += 0.25) {
      const double e = bayes_error_oracle_binary(w0, {0.0, 1.0}, {gap, 1.0});
      EXPECT_LE(e, prev + 1e-12);
      prev = e;
    }
  }
}

TEST(DecisionError, MatchesClosedFormUnderPriorMismatch) {
  testing::Generator gen(31);
  for (int i = 0; i < 100; ++i) {
    const double w0 = gen.real(0.001, 0.5);
    const double a0 = gen.real(0.001, 0.5);
    const double mu1 = gen.real(0.5, 4.0);
    const double err = decision_error(w0, a0, {0.0, 1.0}, {mu1, 1.0});
    EXPECT_NEAR(err, testing::mismatched_error_closed_form(w0, a0, 0.0, mu1, 1.0), 1e-9);
    EXPECT_GE(err, bayes_error_oracle_binary(w0, {0.0, 1.0}, {mu1, 1.0}) - 1e-12);
  }
}

TEST(Mary, TwoClassEnsembleReducesToBinary) {
  testing::Generator gen(55);
  for (int i = 0; i < 20; ++i) {
    const double w0 = gen.real(0.01, 0.99);
    const double sigma = gen.real(0.5, 2.0);
    const GaussianHypothesis h0{gen.real(-3.0, 3.0), sigma};
    const GaussianHypothesis h1{gen.real(-3.0, 3.0), sigma};
    const HypothesisEnsemble e({w0, 1.0 - w0}, {h0, h1});
    EXPECT_NEAR(mary_error_bound(e), chernoff_bound_gaussian(w0, h0, h1), 1e-6);
    EXPECT_NEAR(mary_error_oracle(e), bayes_error_oracle_binary(w0, h0, h1), 1e-8);
  }
}

TEST(Mary, ThreeClassExample) {
  const HypothesisEnsemble e({0.05, 0.475, 0.475}, {{-4.0, 1.0}, {0.0, 1.0}, {4.0, 1.0}});
  const double oracle = mary_error_oracle(e);
  const double bound = mary_error_bound(e);
  EXPECT_GT(oracle, 0.0);
  EXPECT_LE(oracle, bound);
  EXPECT_LE(bound, 0.05 + 1e-9);
}

TEST(Mary, IdenticalHypotheses) {
  const GaussianHypothesis h{1.0, 2.0};
  const HypothesisEnsemble e({0.1, 0.6, 0.3}, {h, h, h});
  EXPECT_NEAR(mary_error_oracle(e), 0.1, 1e-10);
  EXPECT_GE(mary_error_bound(e), 0.1 - 1e-12);
}

TEST(Mary, VanishingMinority) {
  const HypothesisEnsemble e({1e-7, 0.5 - 5e-8, 0.5 - 5e-8}, {{0.0, 1.0}, {1.0, 1.0}, {-1.0, 1.0}});
  EXPECT_LE(mary_error_oracle(e), 1e-7);
}

TEST(Mary, NonZeroMinorityIndexAndUnequalSigmas) {
  const HypothesisEnsemble e({0.45, 0.1, 0.45}, {{-2.0, 1.0}, {0.5, 0.4}, {3.0, 1.5}}, 1);
  EXPECT_LE(mary_error_oracle(e), mary_error_bound(e));
  EXPECT_LE(mary_error_oracle(e), 0.1);
}

}  // namespace
}  // namespace mim
