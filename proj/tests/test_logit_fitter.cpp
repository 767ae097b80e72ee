#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pomnar/logit_fitter.hpp"
#include "support/oracles.hpp"

namespace pomnar {
namespace {

using testing::max_rel_diff;

LogisticDesign random_design(std::mt19937_64& rng, int n, int k, bool weighted) {
  std::normal_distribution<double> norm;
  std::uniform_real_distribution<double> unif;
  VectorXd truth(k);
  for (int j = 0; j < k; ++j) truth(j) = 0.6 * norm(rng);
  LogisticDesign d;
  d.z.resize(n, k);
  d.r.resize(n);
  d.weight.resize(n);
  for (int i = 0; i < n; ++i) {
    d.z(i, 0) = 1.0;
    for (int j = 1; j < k; ++j) d.z(i, j) = norm(rng);
    d.r(i) = unif(rng) < testing::logistic(d.z.row(i).dot(truth)) ? 1.0 : 0.0;
    d.weight(i) = weighted ? 0.1 + 0.9 * unif(rng) : 1.0;
  }
  return d;
}

// Independent weighted Bernoulli log-likelihood.
double naive_loglik(const VectorXd& a, const LogisticDesign& d) {
  double ll = 0.0;
  for (Index i = 0; i < d.size(); ++i) {
    const double p = testing::logistic(d.z.row(i).dot(a));
    ll += d.weight(i) * (d.r(i) > 0.5 ? std::log(p) : std::log(1.0 - p));
  }
  return ll;
}

TEST(LogisticProb, NullVectorGivesHalf) {
  VectorXd z(3);
  z << 1.0, 4.2, 3.0;
  EXPECT_DOUBLE_EQ(logistic_prob({VectorXd::Zero(3)}, z), 0.5);
}

TEST(LogisticProb, UnitLinearPredictor) {
  VectorXd a(2), z(2);
  a << 0.5, 0.25;
  z << 1.0, 2.0;
  EXPECT_NEAR(logistic_prob({a}, z), 0.73106, 5e-6);
}

TEST(LogisticProb, ExtremeNegativePredictor) {
  VectorXd a(1), z(1);
  a << -745.0;
  z << 1.0;
  const double p = logistic_prob({a}, z);
  EXPECT_FALSE(std::isnan(p));
  EXPECT_GE(p, 0.0);
  EXPECT_LT(p, 1e-300);
  a << 745.0;
  EXPECT_DOUBLE_EQ(logistic_prob({a}, z), 1.0);
}

TEST(LogitScore, SingleRowHandValue) {
  const auto d = make_design({{(VectorXd(2) << 1.0, 2.0).finished(), 1, 1.0}});
  const VectorXd s = logit_score({VectorXd::Zero(2)}, d);
  EXPECT_NEAR(s(0), 0.5, 1e-15);
  EXPECT_NEAR(s(1), 1.0, 1e-15);
}

TEST(LogitScore, MatchesCentralDifferences) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 30; ++rep) {
    const auto d = random_design(rng, 40, 2 + rep % 4, true);
    const VectorXd a = VectorXd::LinSpaced(d.z.cols(), -0.4, 0.6);
    auto f = [&](const VectorXd& v) { return naive_loglik(v, d); };
    EXPECT_LT(max_rel_diff(logit_score({a}, d), testing::central_gradient(f, a)), 1e-5);
    EXPECT_LT(max_rel_diff(logit_neg_hessian({a}, d), -testing::central_hessian(f, a)), 1e-4);
    EXPECT_NEAR(logit_log_likelihood({a}, d), naive_loglik(a, d), 1e-10);
  }
}

TEST(FitLogisticWeighted, InterceptOnlyClosedForm) {
  std::vector<LogisticDesignRow> rows;
  for (int r : {1, 1, 1, 0}) rows.push_back({VectorXd::Ones(1), r, 1.0});
  const auto fit = fit_logistic_weighted(rows);
  ASSERT_TRUE(fit.converged);
  EXPECT_NEAR(fit.alpha.alpha(0), std::log(3.0), 1e-10);
  EXPECT_NEAR(fit.alpha.alpha(0), 1.09861, 5e-6);
}

TEST(FitLogisticWeighted, SeparatedDataIsAnError) {
  std::vector<LogisticDesignRow> rows;
  for (int i = 0; i < 8; ++i)
    rows.push_back({(VectorXd(2) << 1.0, i - 3.5).finished(), i < 4 ? 0 : 1, 1.0});
  try {
    fit_logistic_weighted(rows);
    FAIL() << "expected FitError";
  } catch (const FitError& e) {
    EXPECT_EQ(e.kind(), FitErrorKind::Separation);
    EXPECT_EQ(e.submodel(), "missingness");
  }
}

TEST(FitLogisticWeighted, SingleOutcomeIsDegenerate) {
  std::vector<LogisticDesignRow> rows{{VectorXd::Ones(1), 1, 1.0}, {VectorXd::Ones(1), 0, 0.0}};
  try {
    fit_logistic_weighted(rows);
    FAIL() << "expected FitError";
  } catch (const FitError& e) {
    EXPECT_EQ(e.kind(), FitErrorKind::Degenerate);
  }
}

TEST(FitLogisticWeighted, MatchesIrlsOracle) {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 20; ++rep) {
    const bool weighted = rep % 2 == 1;
    const auto d = random_design(rng, 200, 2 + rep % 4, weighted);
    const auto fit = fit_logistic_weighted(d);
    ASSERT_TRUE(fit.converged);
    const VectorXd ref = testing::irls_logistic(d.z, d.r, d.weight);
    EXPECT_LT((fit.alpha.alpha - ref).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT(logit_score(fit.alpha, d).cwiseAbs().maxCoeff(), 1e-8);
    // intercept score zero: weighted mean of p equals weighted mean of r
    double wp = 0.0, wr = 0.0;
    for (Index i = 0; i < d.size(); ++i) {
      wp += d.weight(i) * testing::logistic(d.z.row(i).dot(fit.alpha.alpha));
      wr += d.weight(i) * d.r(i);
    }
    EXPECT_NEAR(wp, wr, 1e-8);
    EXPECT_LT(max_rel_diff(fit.neg_hessian, logit_neg_hessian(fit.alpha, d)), 1e-12);
  }
}

TEST(FitLogisticWeighted, AscentOverIterations) {
  std::mt19937_64 rng(33);
  const auto d = random_design(rng, 300, 4, true);
  NewtonOptions opts;
  double prev = logit_log_likelihood({VectorXd::Zero(4)}, d);
  for (int cap = 1; cap <= 10; ++cap) {
    opts.max_iter = cap;
    try {
      const double ll = fit_logistic_weighted(d, std::nullopt, opts).loglik;
      EXPECT_GE(ll, prev - 1e-12);
      prev = ll;
    } catch (const FitError& e) {
      ASSERT_EQ(e.kind(), FitErrorKind::NonConvergence);
    }
  }
}

TEST(MissingnessDesign, LayoutIsInterceptCovariatesResponse) {
  std::vector<RawRow> rows{{"a", 2, {0.3}, {0.3, 9.0}}, {"b", std::nullopt, {0.1}, {0.1, 8.0}}};
  const auto aug = augment_dataset(validate_dataset(rows, 3));
  const auto d = missingness_design(aug);
  ASSERT_EQ(d.z.cols(), 4);
  ASSERT_EQ(d.size(), 4);
  EXPECT_EQ(d.z.row(0), (Eigen::RowVectorXd(4) << 1.0, 0.3, 9.0, 2.0).finished());
  for (int j = 1; j <= 3; ++j) {
    EXPECT_EQ(d.z(j, 3), static_cast<double>(j));
    EXPECT_EQ(d.r(j), 1.0);
  }
  EXPECT_EQ(d.r(0), 0.0);
}

}  // namespace
}  // namespace pomnar
