#pragma once

// Monte Carlo lab: covariate/response/missingness generators, the whole / cc /
// em estimators, a schedule-invariant replicate runner and metric summaries.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "pomnar/data_model.hpp"
#include "pomnar/em_engine.hpp"
#include "pomnar/errors.hpp"
#include "pomnar/inference.hpp"
#include "pomnar/po_fitter.hpp"

namespace pomnar::sim {

enum class Allocation { Fixed, Bernoulli };
enum class Estimator { Whole, CC, EM };

inline constexpr std::array<Estimator, 3> kAllEstimators{Estimator::Whole, Estimator::CC, Estimator::EM};

inline std::string to_string(Estimator e) {
  switch (e) {
    case Estimator::Whole: return "whole";
    case Estimator::CC: return "cc";
    case Estimator::EM: return "em";
  }
  return "?";
}

inline Estimator estimator_from_string(const std::string& s) {
  for (auto e : kAllEstimators)
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown estimator '" + s + "' (expected whole, cc or em)");
}

// Outcome model uses X1, X3, X4; the missingness model uses X1..X4 and Y.
inline constexpr std::array<Index, 3> kOutcomeColumns{0, 2, 3};
inline constexpr Index kNumCovariates = 4;

struct ScenarioConfig {
  std::string name = "custom";
  int n = 1000;
  int num_categories = 3;
  PoParams truth;                 // descending convention, slopes on (X1, X3, X4)
  MissingnessParams alpha_true;   // (a0, X1..X4, Y)
  int replications = 1000;
  std::uint64_t base_seed = 20240601;
  std::vector<Estimator> estimators{Estimator::Whole, Estimator::CC, Estimator::EM};
  Allocation allocation = Allocation::Fixed;
  double treated_fraction = 0.67;  // Bernoulli allocation only
  double ci_level = 0.95;
  bool em_boundary = true;  // keep EM boundary solutions instead of dropping them

  void validate() const {
    if (name.empty() || !std::all_of(name.begin(), name.end(), [](unsigned char c) {
          return std::isalnum(c) || c == '_' || c == '-' || c == '.';
        }))
      throw std::invalid_argument("scenario: name must be non-empty [A-Za-z0-9_.-]");
    if (n < 2) throw std::invalid_argument("scenario: n must be at least 2");
    if (num_categories < 2) throw std::invalid_argument("scenario: J must be at least 2");
    if (replications < 1) throw std::invalid_argument("scenario: replications must be at least 1");
    if (truth.theta.size() != num_categories - 1)
      throw std::invalid_argument("scenario: need J-1 cut-points");
    if (truth.beta.size() != static_cast<Index>(kOutcomeColumns.size()))
      throw std::invalid_argument("scenario: need 3 outcome slopes (x1, x3, x4)");
    if (alpha_true.size() != kNumCovariates + 2)
      throw std::invalid_argument("scenario: need 6 missingness coefficients (1, x1..x4, y)");
    if (!pomnar::detail::cuts_feasible(truth.theta))
      throw std::invalid_argument("scenario: theta (cut-points) must be strictly decreasing");
    if (estimators.empty()) throw std::invalid_argument("scenario: no estimators requested");
    if (!(ci_level > 0.0 && ci_level < 1.0)) throw std::invalid_argument("scenario: ci_level in (0,1)");
    if (!(treated_fraction >= 0.0 && treated_fraction <= 1.0))
      throw std::invalid_argument("scenario: treated_fraction in [0,1]");
  }

  bool wants(Estimator e) const { return std::find(estimators.begin(), estimators.end(), e) != estimators.end(); }
};

inline std::vector<std::string> parameter_names(int num_categories) {
  std::vector<std::string> out;
  for (int j = 1; j < num_categories; ++j) out.push_back("theta" + std::to_string(j));
  out.insert(out.end(), {"x1", "x3", "x4"});
  return out;
}

// ---------------------------------------------------------------- seeding

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of replicate t, a fixed hash of (base_seed, t).
inline std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t t) {
  return splitmix64(splitmix64(base_seed) ^ splitmix64(t + 0x632be59bd9b4e019ULL));
}

// Independent sub-streams of one replicate.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) { return splitmix64(seed ^ splitmix64(stream)); }

// ---------------------------------------------------------------- generators

/// n x 4 matrix (X1, X2, X3, X4).
inline MatrixXd gen_covariates(int n, std::uint64_t seed, Allocation allocation = Allocation::Fixed,
                               double treated_fraction = 0.67) {
  if (n < 1) throw std::invalid_argument("gen_covariates: n must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution treat(treated_fraction), x2(0.3);
  std::gamma_distribution<double> x3(17.0, 1.0 / 0.2);  // shape, scale
  std::lognormal_distribution<double> x4(3.1, 0.65);
  MatrixXd x(n, kNumCovariates);
  const int controls = (n + 2) / 3;
  for (int i = 0; i < n; ++i) {
    x(i, 0) = allocation == Allocation::Fixed ? (i < controls ? 0.0 : 1.0) : (treat(rng) ? 1.0 : 0.0);
    x(i, 1) = x2(rng) ? 1.0 : 0.0;
    x(i, 2) = x3(rng);
    x(i, 3) = x4(rng);
  }
  return x;
}

inline MatrixXd outcome_design(const MatrixXd& x) {
  MatrixXd out(x.rows(), static_cast<Index>(kOutcomeColumns.size()));
  for (std::size_t k = 0; k < kOutcomeColumns.size(); ++k) out.col(static_cast<Index>(k)) = x.col(kOutcomeColumns[k]);
  return out;
}

/// One multinomial draw per row from category_probs at (X1, X3, X4).
inline std::vector<int> gen_response(const MatrixXd& x, const PoParams& truth, std::uint64_t seed) {
  const MatrixXd xo = outcome_design(x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<int> y(static_cast<std::size_t>(x.rows()));
  for (Index i = 0; i < x.rows(); ++i) {
    const VectorXd pi = category_probs(truth, xo.row(i).transpose());
    const double u = unif(rng);
    double acc = 0.0;
    int cat = static_cast<int>(pi.size());
    for (Index k = 0; k + 1 < pi.size(); ++k) {
      acc += pi(k);
      if (u < acc) {
        cat = static_cast<int>(k) + 1;
        break;
      }
    }
    y[static_cast<std::size_t>(i)] = cat;
  }
  return y;
}

/// R_i ~ Bernoulli(logistic(alpha'(1, X_i, Y_i))).
inline std::vector<int> gen_missingness(const MatrixXd& x, const std::vector<int>& y, const MissingnessParams& alpha,
                                        std::uint64_t seed) {
  if (static_cast<Index>(y.size()) != x.rows() || alpha.size() != x.cols() + 2)
    throw std::invalid_argument("gen_missingness: dimension mismatch");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<int> r(y.size());
  VectorXd z(x.cols() + 2);
  for (Index i = 0; i < x.rows(); ++i) {
    z << 1.0, x.row(i).transpose(), static_cast<double>(y[static_cast<std::size_t>(i)]);
    r[static_cast<std::size_t>(i)] = unif(rng) < pomnar::detail::sigmoid(alpha.alpha.dot(z)) ? 1 : 0;
  }
  return r;
}

struct SimulatedData {
  MatrixXd x;  // n x 4
  std::vector<int> y;
  std::vector<int> r;

  double missing_fraction() const {
    return static_cast<double>(std::count(r.begin(), r.end(), 1)) / static_cast<double>(r.size());
  }
  /// Pre-deletion data: outcome covariates (X1, X3, X4), missingness covariates X1..X4.
  OrdinalDataset complete(int num_categories) const {
    return {num_categories, outcome_design(x), x, {y.begin(), y.end()}};
  }
  OrdinalDataset with_missing(int num_categories) const {
    std::vector<std::optional<int>> yy(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!r[i]) yy[i] = y[i];
    return {num_categories, outcome_design(x), x, std::move(yy)};
  }
};

inline SimulatedData simulate_replicate(const ScenarioConfig& cfg, std::uint64_t seed) {
  SimulatedData d;
  d.x = gen_covariates(cfg.n, stream_seed(seed, 1), cfg.allocation, cfg.treated_fraction);
  d.y = gen_response(d.x, cfg.truth, stream_seed(seed, 2));
  d.r = gen_missingness(d.x, d.y, cfg.alpha_true, stream_seed(seed, 3));
  return d;
}

// ---------------------------------------------------------------- estimators

/// Outcome-model estimates of one estimator on one replicate.
struct EstimatorResult {
  bool converged = false;  // usable estimates, including EM boundary solutions
  bool boundary = false;
  std::string error;  // set when not converged
  VectorXd estimate, se, ci_lower, ci_upper;
  EmAudit audit;  // EM only: every E-step and ascent check of the fit
};

namespace detail {

inline EstimatorResult model_based(const OrdinalDataset& ds, double level) {
  EstimatorResult out;
  try {
    const PoFitResult fit = fit_po_weighted(augment_dataset(ds));
    out.converged = true;
    out.estimate = fit.params.packed();
    try {
      const WaldInference w = se_and_ci(fit.neg_hessian, out.estimate, level);
      out.se = w.se;
      out.ci_lower = w.ci_lower;
      out.ci_upper = w.ci_upper;
    } catch (const FitError&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      out.se = out.ci_lower = out.ci_upper = VectorXd::Constant(out.estimate.size(), nan);
    }
  } catch (const std::exception& e) {
    out = {};
    out.error = e.what();
  }
  return out;
}

}  // namespace detail

/// PO fit on the pre-deletion data; model-based SEs.
inline EstimatorResult fit_whole(const OrdinalDataset& complete, double level = 0.95) {
  return detail::model_based(complete, level);
}

/// PO fit on the complete cases; model-based SEs.
inline EstimatorResult fit_cc(const OrdinalDataset& with_missing, double level = 0.95) {
  return detail::model_based(with_missing.complete_cases(), level);
}

/// EM fit; outcome block of the Louis covariance, or of the imputed-data
/// information for a boundary solution.
inline EstimatorResult fit_em(const OrdinalDataset& with_missing, double level = 0.95, bool allow_boundary = true) {
  EstimatorResult out;
  EmAudit audit;
  try {
    EmOptions opts;
    opts.ci_level = level;
    opts.boundary_fallback = allow_boundary;
    opts.audit = &audit;
    const EmFit fit = em_fit(with_missing, opts);
    out.boundary = fit.boundary != BoundarySide::None;
    const Index m = fit.num_outcome_params();
    out.converged = true;
    out.estimate = fit.gamma.po.packed();
    out.se = fit.se.head(m);
    out.ci_lower = fit.ci_lower.head(m);
    out.ci_upper = fit.ci_upper.head(m);
  } catch (const std::exception& e) {
    out = {};
    out.error = e.what();
  }
  out.audit = audit;
  return out;
}

// ---------------------------------------------------------------- runner

struct ReplicationRecord {
  int index = 0;
  std::uint64_t seed = 0;
  double missing_fraction = 0.0;
  std::array<std::optional<EstimatorResult>, 3> results;  // indexed by Estimator

  const std::optional<EstimatorResult>& result(Estimator e) const { return results[static_cast<std::size_t>(e)]; }
};

inline ReplicationRecord run_replicate(const ScenarioConfig& cfg, int t) {
  ReplicationRecord rec;
  rec.index = t;
  rec.seed = replicate_seed(cfg.base_seed, static_cast<std::uint64_t>(t));
  const SimulatedData d = simulate_replicate(cfg, rec.seed);
  rec.missing_fraction = d.missing_fraction();
  const int J = cfg.num_categories;
  auto slot = [&](Estimator e) -> auto& { return rec.results[static_cast<std::size_t>(e)]; };

  if (cfg.wants(Estimator::Whole)) {
    try {
      slot(Estimator::Whole) = fit_whole(d.complete(J), cfg.ci_level);
    } catch (const DataError& e) {
      slot(Estimator::Whole) = EstimatorResult{false, false, e.what(), {}, {}, {}, {}};
    }
  }
  std::optional<OrdinalDataset> partial;
  try {
    partial.emplace(d.with_missing(J));
  } catch (const DataError& e) {  // every response missing
    for (auto est : {Estimator::CC, Estimator::EM})
      if (cfg.wants(est)) slot(est) = EstimatorResult{false, false, e.what(), {}, {}, {}, {}};
    return rec;
  }
  if (cfg.wants(Estimator::CC)) slot(Estimator::CC) = fit_cc(*partial, cfg.ci_level);
  if (cfg.wants(Estimator::EM)) slot(Estimator::EM) = fit_em(*partial, cfg.ci_level, cfg.em_boundary);
  return rec;
}

/// Runs every replicate on up to `workers` threads. Record t always lands in
/// slot t and depends only on (cfg, t), so output is schedule-invariant.
template <class Progress = std::nullptr_t>
std::vector<ReplicationRecord> run_scenario(const ScenarioConfig& cfg, int workers = 1, Progress progress = nullptr) {
  cfg.validate();
  std::vector<ReplicationRecord> out(static_cast<std::size_t>(cfg.replications));
  std::atomic<int> next{0}, done{0};
  auto work = [&] {
    for (int t; (t = next.fetch_add(1)) < cfg.replications;) {
      out[static_cast<std::size_t>(t)] = run_replicate(cfg, t);
      const int d = done.fetch_add(1) + 1;
      if constexpr (!std::is_same_v<Progress, std::nullptr_t>) progress(d, cfg.replications);
    }
  };
  const int n_threads = std::clamp(workers, 1, cfg.replications);
  if (n_threads == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

// ---------------------------------------------------------------- summaries

struct MetricsRow {
  std::string parameter;
  Estimator estimator = Estimator::EM;
  double truth = 0.0;
  int converged = 0;  // replicates entering the summary
  int boundary = 0;   // of which EM boundary solutions
  int failed = 0;
  double mean_estimate = 0.0;
  double abs_bias = 0.0;
  double sd = 0.0;       // divisor: number of converged replicates
  double mean_se = 0.0;  // over replicates with a finite SE
  double mse = 0.0;      // abs_bias^2 + sd^2
  double cp = 0.0;       // NaN when no replicate has a finite positive SE
  int cp_count = 0;      // replicates entering cp
  double rel_bias = 0.0;
  bool rel_bias_defined = true;
};

struct MetricsTable {
  std::string scenario;
  int n = 0;
  int replications = 0;
  double mean_missing_fraction = 0.0;
  std::vector<MetricsRow> rows;

  const MetricsRow* find(const std::string& parameter, Estimator e) const {
    for (const auto& r : rows)
      if (r.parameter == parameter && r.estimator == e) return &r;
    return nullptr;
  }
};

inline MetricsRow summarize_parameter(const std::vector<double>& est, const std::vector<double>& se,
                                      const std::vector<double>& lo, const std::vector<double>& hi, double truth) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  MetricsRow row;
  row.truth = truth;
  row.converged = static_cast<int>(est.size());
  if (est.empty()) {
    row.mean_estimate = row.abs_bias = row.sd = row.mean_se = row.mse = row.cp = row.rel_bias = nan;
    return row;
  }
  const double n = static_cast<double>(est.size());
  double sum = 0.0;
  for (double v : est) sum += v;
  row.mean_estimate = sum / n;
  double ss = 0.0;
  for (double v : est) ss += (v - row.mean_estimate) * (v - row.mean_estimate);
  row.sd = std::sqrt(ss / n);
  const double bias = row.mean_estimate - truth;
  row.abs_bias = std::abs(bias);
  row.mse = row.abs_bias * row.abs_bias + row.sd * row.sd;
  if (truth != 0.0) {
    row.rel_bias = bias / truth;
  } else {
    row.rel_bias = nan;
    row.rel_bias_defined = false;
  }
  double se_sum = 0.0;
  int se_n = 0, covered = 0;
  for (std::size_t i = 0; i < se.size(); ++i) {
    if (!std::isfinite(se[i]) || !(se[i] > 0.0)) continue;
    se_sum += se[i];
    ++se_n;
    if (lo[i] <= truth && truth <= hi[i]) ++covered;
  }
  row.mean_se = se_n ? se_sum / se_n : nan;
  row.cp_count = se_n;
  row.cp = se_n ? static_cast<double>(covered) / se_n : nan;
  return row;
}

inline MetricsTable summarize(const std::vector<ReplicationRecord>& records, const ScenarioConfig& cfg) {
  MetricsTable table;
  table.scenario = cfg.name;
  table.n = cfg.n;
  table.replications = static_cast<int>(records.size());
  for (const auto& r : records) table.mean_missing_fraction += r.missing_fraction;
  if (!records.empty()) table.mean_missing_fraction /= static_cast<double>(records.size());

  const VectorXd truth = cfg.truth.packed();
  const auto names = parameter_names(cfg.num_categories);
  for (Estimator e : kAllEstimators) {
    if (!cfg.wants(e)) continue;
    for (Index k = 0; k < truth.size(); ++k) {
      std::vector<double> est, se, lo, hi;
      int failed = 0, boundary = 0;
      for (const auto& r : records) {
        const auto& res = r.result(e);
        if (!res || !res->converged) {
          ++failed;
          continue;
        }
        if (res->boundary) ++boundary;
        est.push_back(res->estimate(k));
        se.push_back(res->se(k));
        lo.push_back(res->ci_lower(k));
        hi.push_back(res->ci_upper(k));
      }
      MetricsRow row = summarize_parameter(est, se, lo, hi, truth(k));
      row.boundary = boundary;
      row.parameter = names[static_cast<std::size_t>(k)];
      row.estimator = e;
      row.failed = failed;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

// ---------------------------------------------------------------- presets

/// Missingness intercepts calibrated to about 10 / 25 / 45 percent missing.
inline ScenarioConfig table_preset(const std::string& name, int n) {
  ScenarioConfig cfg;
  cfg.name = name;
  cfg.n = n;
  cfg.num_categories = 3;
  cfg.truth = {(VectorXd(2) << 1.0, -0.6).finished(), (VectorXd(3) << -1.0, 0.005, -0.1).finished()};
  double a0;
  if (name == "t2") a0 = 1.0;
  else if (name == "t3") a0 = 2.8;
  else if (name == "t4") a0 = 4.8;
  else if (name == "supp5") {
    cfg.num_categories = 5;
    cfg.truth = {(VectorXd(4) << 0.6, 0.5, -0.2, -0.7).finished(), (VectorXd(3) << -1.3, 0.008, -0.02).finished()};
    cfg.alpha_true.alpha = (VectorXd(6) << 4.2, -2.0, -0.6, 0.05, -0.1, -4.0).finished();
    return cfg;
  } else if (name == "alt") {
    cfg.truth.beta << 0.5, -0.05, 0.1;
    cfg.alpha_true.alpha = (VectorXd(6) << 4.8, 1.0, -0.6, 0.05, -0.1, -3.0).finished();
    return cfg;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "' (expected t2, t3, t4, supp5 or alt)");
  }
  cfg.alpha_true.alpha = (VectorXd(6) << a0, -2.0, -0.6, 0.05, -0.1, -4.0).finished();
  return cfg;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"t2", "t3", "t4", "supp5", "alt"};
  return names;
}

}  // namespace pomnar::sim
