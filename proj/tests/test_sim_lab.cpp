#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <cstring>
#include <random>
#include <set>

#include "pomnar/sim_lab.hpp"
#include "support/oracles.hpp"

namespace pomnar::sim {
namespace {

double column_mean(const MatrixXd& x, Index col) { return x.col(col).mean(); }

TEST(GenCovariates, GammaAndLognormalMeans) {
  const MatrixXd x = gen_covariates(1000000, 11);
  EXPECT_NEAR(column_mean(x, 2), 17.0 / 0.2, 0.5);
  EXPECT_NEAR(column_mean(x, 3), std::exp(3.1 + 0.65 * 0.65 / 2.0), 0.3);
  EXPECT_NEAR(column_mean(x, 1), 0.3, 0.002);
  EXPECT_GT(x.col(2).minCoeff(), 0.0);
  EXPECT_GT(x.col(3).minCoeff(), 0.0);
}

TEST(GenCovariates, FixedAllocationFirstThirdControls) {
  for (int n : {1, 2, 3, 4, 60, 61, 1000}) {
    const MatrixXd x = gen_covariates(n, 12);
    const int controls = (n + 2) / 3;  // ceil(n / 3)
    for (int i = 0; i < n; ++i) EXPECT_EQ(x(i, 0), i < controls ? 0.0 : 1.0) << "n=" << n << " i=" << i;
  }
}

TEST(GenCovariates, BernoulliAllocationFraction) {
  const MatrixXd x = gen_covariates(200000, 13, Allocation::Bernoulli, 0.67);
  const double sd = std::sqrt(0.67 * 0.33 / 200000.0);
  EXPECT_NEAR(column_mean(x, 0), 0.67, 4 * sd);
}

TEST(GenCovariates, DeterministicUnderSeed) {
  EXPECT_EQ(gen_covariates(500, 14), gen_covariates(500, 14));
  EXPECT_NE(gen_covariates(500, 14), gen_covariates(500, 15));
  EXPECT_THROW(gen_covariates(0, 1), std::invalid_argument);
}

TEST(GenResponse, UniformCategoriesWithinThreeSigma) {
  // theta = (log 2, -log 2), beta = 0 gives pi = (1/3, 1/3, 1/3)
  PoParams truth{(VectorXd(2) << std::log(2.0), -std::log(2.0)).finished(), VectorXd::Zero(3)};
  const int n = 100000;
  const auto y = gen_response(gen_covariates(n, 21), truth, 22);
  const double sd = std::sqrt(n * (1.0 / 3) * (2.0 / 3));
  for (int k = 1; k <= 3; ++k)
    EXPECT_NEAR(std::count(y.begin(), y.end(), k), n / 3.0, 3 * sd) << "category " << k;
}

TEST(GenResponse, FrequenciesMatchAveragedModelProbabilities) {
  for (const char* name : {"t2", "supp5"}) {
    const auto cfg = table_preset(name, 100000);
    const MatrixXd x = gen_covariates(cfg.n, 23);
    const auto y = gen_response(x, cfg.truth, 24);
    const int J = cfg.num_categories;
    std::vector<double> expected(J, 0.0), var(J, 0.0);
    for (Index i = 0; i < x.rows(); ++i) {
      const VectorXd xo = (VectorXd(3) << x(i, 0), x(i, 2), x(i, 3)).finished();
      const auto pi = testing::naive_probs(cfg.truth.theta, cfg.truth.beta, xo);
      for (int k = 0; k < J; ++k) {
        expected[k] += pi[k];
        var[k] += pi[k] * (1 - pi[k]);
      }
    }
    for (int k = 0; k < J; ++k)
      EXPECT_NEAR(std::count(y.begin(), y.end(), k + 1), expected[k], 3 * std::sqrt(var[k]))
          << name << " category " << k + 1;
  }
}

TEST(GenResponse, Deterministic) {
  const auto cfg = table_preset("t2", 300);
  const MatrixXd x = gen_covariates(cfg.n, 25);
  EXPECT_EQ(gen_response(x, cfg.truth, 26), gen_response(x, cfg.truth, 26));
}

TEST(GenMissingness, ZeroAlphaIsHalf) {
  const int n = 100000;
  const MatrixXd x = gen_covariates(n, 31);
  const std::vector<int> y(n, 2);
  const auto r = gen_missingness(x, y, {VectorXd::Zero(6)}, 32);
  EXPECT_NEAR(std::accumulate(r.begin(), r.end(), 0) / double(n), 0.5, 0.01);
}

TEST(GenMissingness, TenPercentScenario) {
  const auto cfg = table_preset("t2", 100000);
  const auto d = simulate_replicate(cfg, 33);
  EXPECT_NEAR(d.missing_fraction(), 0.10, 0.02);
}

// Realized fraction against the analytic expectation sum_i P(R_i = 1 | x_i, y_i).
TEST(GenMissingness, FractionMatchesExpectedProbability) {
  for (const auto& name : preset_names()) {
    const auto cfg = table_preset(name, 100000);
    const auto d = simulate_replicate(cfg, 34);
    double expected = 0.0, var = 0.0;
    for (Index i = 0; i < d.x.rows(); ++i) {
      double eta = cfg.alpha_true.alpha(0) + cfg.alpha_true.alpha(5) * d.y[i];
      for (int k = 0; k < 4; ++k) eta += cfg.alpha_true.alpha(k + 1) * d.x(i, k);
      const double p = testing::logistic(eta);
      expected += p;
      var += p * (1 - p);
    }
    const double realized = std::count(d.r.begin(), d.r.end(), 1);
    EXPECT_NEAR(realized, expected, 4 * std::sqrt(var)) << name;
  }
}

TEST(Seeds, ReplicateSeedsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 10000; ++t) seen.insert(replicate_seed(7, t));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_EQ(replicate_seed(7, 3), replicate_seed(7, 3));
  EXPECT_NE(replicate_seed(7, 3), replicate_seed(8, 3));
  // reference value of the mixer
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Estimators, WholeEqualsCcWithoutMissingData) {
  auto cfg = table_preset("t2", 300);
  cfg.alpha_true.alpha << -60.0, 0, 0, 0, 0, 0;
  const auto d = simulate_replicate(cfg, 41);
  ASSERT_EQ(d.missing_fraction(), 0.0);
  const auto whole = fit_whole(d.complete(3));
  const auto cc = fit_cc(d.with_missing(3));
  ASSERT_TRUE(whole.converged && cc.converged);
  EXPECT_EQ(whole.estimate, cc.estimate);
  EXPECT_EQ(whole.se, cc.se);
  // EM on complete data reduces to the same fit
  const auto em = fit_em(d.with_missing(3));
  ASSERT_TRUE(em.converged);
  EXPECT_LT((em.estimate - whole.estimate).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Estimators, ModelBasedSeFromInverseNegHessian) {
  const auto cfg = table_preset("t3", 400);
  const auto d = simulate_replicate(cfg, 42);
  const auto cc = fit_cc(d.with_missing(3));
  ASSERT_TRUE(cc.converged);
  const OrdinalDataset ds = d.with_missing(3).complete_cases();
  const PoParams p = PoParams::unpack(cc.estimate, 2);
  const auto aug = augment_dataset(ds);
  auto f = [&](const VectorXd& v) { return testing::naive_po_loglik(v, aug); };
  const MatrixXd info = -testing::central_hessian(f, cc.estimate);
  const VectorXd se = info.inverse().diagonal().cwiseSqrt();
  EXPECT_LT(testing::max_rel_diff(cc.se, se), 1e-4);
  const double z = 1.959963984540054;
  EXPECT_LT((cc.ci_upper - cc.estimate - z * cc.se).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(po_score(p, aug).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(RunScenario, SingleReplicationGivesOneRecord) {
  auto cfg = table_preset("t2", 60);
  cfg.replications = 1;
  const auto recs = run_scenario(cfg);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].index, 0);
  EXPECT_EQ(recs[0].seed, replicate_seed(cfg.base_seed, 0));
}

bool same_result(const std::optional<EstimatorResult>& a, const std::optional<EstimatorResult>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  auto eq = [](const VectorXd& u, const VectorXd& v) {
    return u.size() == v.size() && std::equal(u.data(), u.data() + u.size(), v.data(), [](double s, double t) {
             return std::memcmp(&s, &t, sizeof s) == 0;
           });
  };
  return a->converged == b->converged && a->boundary == b->boundary && a->error == b->error &&
         eq(a->estimate, b->estimate) && eq(a->se, b->se) && eq(a->ci_lower, b->ci_lower) &&
         eq(a->ci_upper, b->ci_upper);
}

TEST(RunScenario, BitwiseIdenticalAcrossWorkerCounts) {
  auto cfg = table_preset("t3", 60);
  cfg.replications = 8;
  const auto a = run_scenario(cfg, 1);
  const auto b = run_scenario(cfg, 3);
  const auto c = run_scenario(cfg, 8);
  for (std::size_t t = 0; t < a.size(); ++t) {
    EXPECT_EQ(a[t].seed, b[t].seed);
    EXPECT_EQ(a[t].missing_fraction, c[t].missing_fraction);
    for (auto e : kAllEstimators) {
      EXPECT_TRUE(same_result(a[t].result(e), b[t].result(e))) << "rep " << t << " " << to_string(e);
      EXPECT_TRUE(same_result(a[t].result(e), c[t].result(e))) << "rep " << t << " " << to_string(e);
    }
  }
}

TEST(RunScenario, OnlyRequestedEstimatorsRun) {
  auto cfg = table_preset("t2", 80);
  cfg.replications = 2;
  cfg.estimators = {Estimator::CC};
  const auto recs = run_scenario(cfg);
  EXPECT_FALSE(recs[0].result(Estimator::Whole).has_value());
  EXPECT_TRUE(recs[0].result(Estimator::CC).has_value());
  EXPECT_FALSE(recs[0].result(Estimator::EM).has_value());
  const auto table = summarize(recs, cfg);
  EXPECT_EQ(table.rows.size(), 5u);
}

TEST(Summarize, HandArithmetic) {
  const auto row = summarize_parameter({-1.0, -1.2}, {0.1, 0.1}, {-1.2, -1.4}, {-0.8, -1.0}, -1.0);
  EXPECT_NEAR(row.mean_estimate, -1.1, 1e-15);
  EXPECT_NEAR(row.abs_bias, 0.1, 1e-15);
  EXPECT_NEAR(row.sd, 0.1, 1e-15);
  EXPECT_NEAR(row.mse, 0.02, 1e-15);
  EXPECT_DOUBLE_EQ(row.cp, 1.0);
  EXPECT_NEAR(row.rel_bias, 0.1, 1e-15);
  EXPECT_NEAR(row.mean_se, 0.1, 1e-15);
}

TEST(Summarize, DegenerateEstimatesAtTruth) {
  const auto row = summarize_parameter({0.5, 0.5, 0.5}, {0.0, 0.0, 0.0}, {0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}, 0.5);
  EXPECT_EQ(row.abs_bias, 0.0);
  EXPECT_EQ(row.mse, 0.0);
  EXPECT_TRUE(std::isnan(row.cp));
  EXPECT_EQ(row.cp_count, 0);
  const auto zero = summarize_parameter({0.1, -0.1}, {1.0, 1.0}, {-1.0, -1.0}, {1.0, 1.0}, 0.0);
  EXPECT_FALSE(zero.rel_bias_defined);
  EXPECT_TRUE(std::isnan(zero.rel_bias));
}

TEST(Summarize, MseIdentityAndCounts) {
  auto cfg = table_preset("t3", 60);
  cfg.replications = 12;
  const auto recs = run_scenario(cfg);
  const auto table = summarize(recs, cfg);
  ASSERT_EQ(table.rows.size(), 15u);
  for (const auto& row : table.rows) {
    EXPECT_EQ(row.converged + row.failed, 12);
    if (row.converged == 0) continue;
    EXPECT_NEAR(row.mse, row.abs_bias * row.abs_bias + row.sd * row.sd, 1e-12);
    EXPECT_LE(row.cp_count, row.converged);
  }
  // independent recomputation of one row
  const auto* em_x1 = table.find("x1", Estimator::EM);
  ASSERT_NE(em_x1, nullptr);
  std::vector<double> v;
  for (const auto& r : recs)
    if (r.result(Estimator::EM)->converged) v.push_back(r.result(Estimator::EM)->estimate(2));
  ASSERT_EQ(static_cast<int>(v.size()), em_x1->converged);
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  double ss = 0.0;
  for (double e : v) ss += (e - mean) * (e - mean);
  EXPECT_NEAR(em_x1->mean_estimate, mean, 1e-12);
  EXPECT_NEAR(em_x1->sd, std::sqrt(ss / v.size()), 1e-12);
}

TEST(ScenarioConfig, ValidationErrors) {
  auto cfg = table_preset("t2", 100);
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.replications = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.truth.theta << -0.6, 1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.alpha_true.alpha = VectorXd::Zero(5);
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.num_categories = 5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(table_preset("t9", 100), std::invalid_argument);
  EXPECT_THROW(estimator_from_string("mi"), std::invalid_argument);
}

TEST(Presets, FiveCategoryAndAlternateTruths) {
  const auto s5 = table_preset("supp5", 500);
  EXPECT_EQ(s5.num_categories, 5);
  EXPECT_EQ(s5.truth.packed(), (VectorXd(7) << 0.6, 0.5, -0.2, -0.7, -1.3, 0.008, -0.02).finished());
  const auto alt = table_preset("alt", 250);
  EXPECT_EQ(alt.truth.packed(), (VectorXd(5) << 1, -0.6, 0.5, -0.05, 0.1).finished());
  EXPECT_EQ(alt.alpha_true.alpha, (VectorXd(6) << 4.8, 1, -0.6, 0.05, -0.1, -3).finished());
  EXPECT_EQ(parameter_names(5), (std::vector<std::string>{"theta1", "theta2", "theta3", "theta4", "x1", "x3", "x4"}));
}

}  // namespace
}  // namespace pomnar::sim
