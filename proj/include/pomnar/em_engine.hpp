#pragma once

// EM estimation of the proportional-odds model under a selection model for
// nonignorable missing responses, with Louis observed information.
//
// Joint model per subject:  f(y | x; theta, beta) * P(R | w, y; alpha).
// E-step: for a missing subject, w_j proportional to f_j * P(R = 1 | w, j).
// M-step: weighted proportional-odds fit on the augmented rows (outcome part)
// and weighted logistic fit of R on (1, w, y) (missingness part).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pomnar/data_model.hpp"
#include "pomnar/errors.hpp"
#include "pomnar/inference.hpp"
#include "pomnar/logit_fitter.hpp"
#include "pomnar/po_fitter.hpp"

namespace pomnar {

/// Running E-step and ascent diagnostics across any number of fits,
/// including runs that end in an error.
struct EmAudit {
  long e_steps = 0;
  long ascent_checks = 0;
  double max_ascent_violation = 0.0;
  double max_weight_sum_error = 0.0;
  bool observed_weights_exact = true;

  void merge(const EmAudit& o) {
    e_steps += o.e_steps;
    ascent_checks += o.ascent_checks;
    max_ascent_violation = std::max(max_ascent_violation, o.max_ascent_violation);
    max_weight_sum_error = std::max(max_weight_sum_error, o.max_weight_sum_error);
    observed_weights_exact = observed_weights_exact && o.observed_weights_exact;
  }
};

struct EmOptions {
  double outer_tol = 1e-6;  // on sum |gamma^(t+1) - gamma^(t)|
  int max_outer = 500;
  NewtonOptions outcome;
  NewtonOptions missingness;
  double ci_level = 0.95;
  // Response-slope starting values tried, in order, when the default start
  // ends in a separation or non-convergence error. Empty disables restarts.
  std::vector<double> restart_response_slopes{-1.0, 1.0, -3.0, 3.0};
  // When every start fails, accept the better boundary limit (response slope
  // at -inf or +inf) if it is at least as high as the EM path reached.
  bool boundary_fallback = false;
  // Optional sink updated on every E-step and ascent check.
  EmAudit* audit = nullptr;
};

/// Where the response slope of the missingness model went when the maximum is
/// at infinity: -inf puts every missing response at category 1, +inf at J.
enum class BoundarySide { None, Lowest, Highest };

inline const char* to_string(BoundarySide side) {
  switch (side) {
    case BoundarySide::None: return "none";
    case BoundarySide::Lowest: return "lowest";
    case BoundarySide::Highest: return "highest";
  }
  return "?";
}

struct EmFit {
  GammaParams gamma;
  // Ordered (theta, beta, alpha). Rows/cols of alpha are NaN when the
  // missingness model is degenerate; all NaN when `covariance_error` is set.
  MatrixXd covariance;
  VectorXd se;
  VectorXd ci_lower;
  VectorXd ci_upper;
  std::vector<double> loglik_trace;  // observed-data log-likelihood, starting point first
  AugmentedDataset weights;          // final E-step weights at gamma
  int iterations = 0;
  bool converged = false;
  int restarts = 0;  // alternative starts tried after the default one failed
  // Boundary solution: alpha is NaN, `boundary_alpha` holds (intercept, w
  // slopes) of the limiting missingness model among subjects at the extreme
  // category, and only the outcome block of the covariance is filled.
  BoundarySide boundary = BoundarySide::None;
  VectorXd boundary_alpha;
  bool missingness_degenerate = false;  // no missing responses: alpha not estimable
  std::optional<std::string> covariance_error;

  // Diagnostics accumulated over every E-step and outer iteration.
  double max_ascent_violation = 0.0;  // max(ll_{t-1} - ll_t, 0)
  double max_weight_sum_error = 0.0;
  bool observed_weights_exact = true;

  Index num_outcome_params() const { return gamma.po.size(); }
};

namespace detail {

inline double log_sigmoid(double t) { return -log1pexp(-t); }

// log f_j + log P(R = 1 | w, j) for j = 1..J at one subject.
inline VectorXd missing_joint_logs(const GammaParams& g, double xb, const auto& w, int J) {
  const Index q = w.size();
  const double base = g.miss.alpha(0) + g.miss.alpha.segment(1, q).dot(w.transpose());
  const double slope_y = g.miss.alpha(q + 1);
  VectorXd out(J);
  for (int j = 1; j <= J; ++j) {
    const double f = category_prob(g.po.theta, xb, j);
    out(j - 1) = (f > 0.0 ? std::log(f) : -std::numeric_limits<double>::infinity()) +
                 log_sigmoid(base + slope_y * j);
  }
  return out;
}

inline void check_gamma(const GammaParams& g, Index p, Index q, int J) {
  if (g.po.theta.size() != J - 1 || g.po.beta.size() != p || g.miss.alpha.size() != q + 2)
    throw DataError("parameter dimensions do not match the data");
  if (!cuts_feasible(g.po.theta))
    throw FitError(FitErrorKind::Domain, "outcome", "cut-points are not strictly decreasing");
}

}  // namespace detail

/// Recomputes weights in place. Observed rows keep weight 1.
inline void update_weights(const GammaParams& gamma, AugmentedDataset& aug) {
  const int J = aug.num_categories;
  detail::check_gamma(gamma, aug.x.cols(), aug.w.cols(), J);
  for (const auto& g : aug.groups) {
    if (!g.missing) {
      aug.weight(g.first_row) = 1.0;
      continue;
    }
    const double xb = aug.x.row(g.first_row).dot(gamma.po.beta);
    const VectorXd logs = detail::missing_joint_logs(gamma, xb, aug.w.row(g.first_row), J);
    const double top = logs.maxCoeff();
    if (!std::isfinite(top))
      throw FitError(FitErrorKind::Domain, "em",
                     "all joint probabilities vanish for subject " + aug.ids[&g - aug.groups.data()]);
    VectorXd u = (logs.array() - top).exp();
    u /= u.sum();
    u /= u.sum();
    aug.weight.segment(g.first_row, g.num_rows) = u;
  }
}

inline AugmentedDataset e_step_weights(const GammaParams& gamma, const AugmentedDataset& aug) {
  AugmentedDataset out = aug;
  update_weights(gamma, out);
  return out;
}

/// Sum over observed subjects of log f(y) + log P(R = 0 | w, y) plus, over
/// missing subjects, log sum_j f_j P(R = 1 | w, j).
inline double observed_data_loglik(const GammaParams& gamma, const OrdinalDataset& ds) {
  const int J = ds.num_categories();
  const Index q = ds.num_missingness_covariates();
  detail::check_gamma(gamma, ds.num_outcome_covariates(), q, J);
  const VectorXd xb = ds.outcome_covariates() * gamma.po.beta;
  const VectorXd base = (ds.missingness_covariates() * gamma.miss.alpha.segment(1, q)).array() +
                        gamma.miss.alpha(0);
  const double slope_y = gamma.miss.alpha(q + 1);
  double ll = 0.0;
  for (Index i = 0; i < ds.size(); ++i) {
    const auto& yi = ds.responses()[static_cast<std::size_t>(i)];
    if (yi) {
      const double f = detail::category_prob(gamma.po.theta, xb(i), *yi);
      if (!(f > 0.0)) throw FitError(FitErrorKind::Domain, "outcome", "non-positive probability");
      ll += std::log(f) + detail::log_sigmoid(-(base(i) + slope_y * *yi));
    } else {
      const VectorXd logs =
          detail::missing_joint_logs(gamma, xb(i), ds.missingness_covariates().row(i), J);
      const double top = logs.maxCoeff();
      if (!std::isfinite(top)) throw FitError(FitErrorKind::Domain, "em", "zero marginal probability");
      ll += top + std::log((logs.array() - top).exp().sum());
    }
  }
  return ll;
}

/// Missing-information term sum_i [sum_j w_ij S_ij S_ij' - qdot_i qdot_i'],
/// with S_ij the complete-data score of augmented row (i, j) at gamma.
inline MatrixXd louis_correction(const GammaParams& gamma, const AugmentedDataset& aug) {
  const Index m1 = gamma.po.size();
  const Index m2 = gamma.miss.size();
  MatrixXd corr = MatrixXd::Zero(m1 + m2, m1 + m2);
  VectorXd s(m1 + m2);
  VectorXd z(m2);
  for (const auto& g : aug.groups) {
    if (!g.missing) continue;
    VectorXd qdot = VectorXd::Zero(m1 + m2);
    MatrixXd outer = MatrixXd::Zero(m1 + m2, m1 + m2);
    for (Index row = g.first_row; row < g.first_row + g.num_rows; ++row) {
      const double w = aug.weight(row);
      z << 1.0, aug.w.row(row).transpose(), static_cast<double>(aug.y(row));
      const double p = detail::sigmoid(gamma.miss.alpha.dot(z));
      s.head(m1) = po_row_score(gamma.po, aug, row);
      s.tail(m2) = (aug.r(row) - p) * z;
      qdot += w * s;
      outer.selfadjointView<Eigen::Lower>().rankUpdate(s, w);
    }
    outer.triangularView<Eigen::StrictlyUpper>() = outer.transpose();
    corr += outer;
    corr.noalias() -= qdot * qdot.transpose();
  }
  return 0.5 * (corr + corr.transpose());
}

/// Observed information I = Qddot - correction, both evaluated at gamma with
/// weights computed at gamma. Qddot is the block-diagonal weighted negative
/// Hessian of the outcome and missingness parts.
inline MatrixXd louis_information(const GammaParams& gamma, const AugmentedDataset& aug_final) {
  const Index m1 = gamma.po.size();
  const Index m2 = gamma.miss.size();
  MatrixXd info = MatrixXd::Zero(m1 + m2, m1 + m2);
  info.topLeftCorner(m1, m1) = po_neg_hessian(gamma.po, aug_final);
  info.bottomRightCorner(m2, m2) = logit_neg_hessian(gamma.miss, missingness_design(aug_final));
  info -= louis_correction(gamma, aug_final);
  info = 0.5 * (info + info.transpose()).eval();
  Eigen::LLT<MatrixXd> llt(info);
  if (llt.info() != Eigen::Success)
    throw FitError(FitErrorKind::NotPositiveDefinite, "louis",
                   "observed information is not positive definite");
  return info;
}

struct BoundaryLimit {
  BoundarySide side = BoundarySide::None;
  PoFitResult outcome;             // PO fit with missing responses at the extreme category
  LogisticFitResult missingness;   // R on (1, w) among subjects at the extreme category
  double loglik = 0.0;             // limit of the observed-data log-likelihood
};

/// Supremum of the observed-data likelihood along the response slope tending
/// to -inf (Lowest) or +inf (Highest). Every missing response is then at the
/// extreme category c and observed responses other than c are never missing,
/// so the limit splits into a PO fit on the imputed data plus a logistic fit
/// restricted to subjects at c.
inline BoundaryLimit boundary_limit(const OrdinalDataset& ds, BoundarySide side, const EmOptions& opts = {}) {
  if (side == BoundarySide::None) throw std::invalid_argument("boundary_limit: side must be Lowest or Highest");
  const int c = side == BoundarySide::Lowest ? 1 : ds.num_categories();
  std::vector<std::optional<int>> imputed = ds.responses();
  for (auto& y : imputed)
    if (!y) y = c;
  const OrdinalDataset full(ds.num_categories(), ds.outcome_covariates(), ds.missingness_covariates(),
                            std::move(imputed), ds.ids());
  BoundaryLimit out;
  out.side = side;
  out.outcome = fit_po_weighted(augment_dataset(full), std::nullopt, opts.outcome);

  const Index q = ds.num_missingness_covariates();
  std::vector<LogisticDesignRow> rows;
  for (Index i = 0; i < ds.size(); ++i) {
    const auto& yi = ds.responses()[static_cast<std::size_t>(i)];
    if (yi && *yi != c) continue;
    VectorXd z(q + 1);
    z << 1.0, ds.missingness_covariates().row(i).transpose();
    rows.push_back({std::move(z), yi ? 0 : 1, 1.0});
  }
  out.missingness = fit_logistic_weighted(rows, std::nullopt, opts.missingness);
  out.loglik = out.outcome.loglik + out.missingness.loglik;
  return out;
}

namespace detail {

inline GammaParams em_start(const OrdinalDataset& ds, const EmOptions& opts) {
  GammaParams g;
  const OrdinalDataset cc = ds.complete_cases();
  const AugmentedDataset cc_aug = augment_dataset(cc);
  try {
    g.po = fit_po_weighted(cc_aug, std::nullopt, opts.outcome).params;
  } catch (const FitError&) {
    g.po = default_po_start(cc_aug);
  }

  const Index q = ds.num_missingness_covariates();
  g.miss.alpha = VectorXd::Zero(q + 2);
  if (ds.num_missing() == 0) return g;
  // R on (1, w) one row per subject; the response slope starts at zero.
  LogisticDesign d;
  d.z.resize(ds.size(), q + 1);
  d.z.col(0).setOnes();
  d.z.rightCols(q) = ds.missingness_covariates();
  d.r.resize(ds.size());
  for (Index i = 0; i < ds.size(); ++i) d.r(i) = ds.is_missing(i) ? 1.0 : 0.0;
  d.weight = VectorXd::Ones(ds.size());
  try {
    g.miss.alpha.head(q + 1) = fit_logistic_weighted(d, std::nullopt, opts.missingness).alpha.alpha;
  } catch (const FitError&) {
    const double frac = static_cast<double>(ds.num_missing()) / static_cast<double>(ds.size());
    g.miss.alpha(0) = std::log(frac / (1.0 - frac));
  }
  return g;
}

inline void attach_inference(EmFit& fit, const MatrixXd& info, double level) {
  const VectorXd est = fit.gamma.packed();
  const WaldInference inf = se_and_ci(info, est, level);
  fit.covariance = inf.covariance;
  fit.se = inf.se;
  fit.ci_lower = inf.ci_lower;
  fit.ci_upper = inf.ci_upper;
}

inline void set_nan_inference(EmFit& fit) {
  const Index m = fit.gamma.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  fit.covariance = MatrixXd::Constant(m, m, nan);
  fit.se = VectorXd::Constant(m, nan);
  fit.ci_lower = VectorXd::Constant(m, nan);
  fit.ci_upper = VectorXd::Constant(m, nan);
}

inline void record_weights(EmFit& fit, const AugmentedDataset& aug, EmAudit* audit = nullptr) {
  const WeightCheck wc = check_weights(aug);
  fit.max_weight_sum_error = std::max(fit.max_weight_sum_error, wc.max_group_sum_error);
  fit.observed_weights_exact = fit.observed_weights_exact && wc.observed_exactly_one;
  if (audit) {
    ++audit->e_steps;
    audit->max_weight_sum_error = std::max(audit->max_weight_sum_error, wc.max_group_sum_error);
    audit->observed_weights_exact = audit->observed_weights_exact && wc.observed_exactly_one;
  }
}

inline void record_ascent(EmFit& fit, double next_loglik, EmAudit* audit) {
  const double drop = fit.loglik_trace.back() - next_loglik;
  fit.max_ascent_violation = std::max(fit.max_ascent_violation, drop);
  if (audit) {
    ++audit->ascent_checks;
    audit->max_ascent_violation = std::max(audit->max_ascent_violation, drop);
  }
}

// Outer EM loop from `gamma`. Fills the trace and diagnostics of `fit`.
inline GammaParams em_run(const OrdinalDataset& ds, GammaParams gamma, const EmOptions& opts, EmFit& fit) {
  fit.loglik_trace.assign(1, observed_data_loglik(gamma, ds));
  fit.converged = false;
  for (int t = 1; t <= opts.max_outer; ++t) {
    update_weights(gamma, fit.weights);
    record_weights(fit, fit.weights, opts.audit);

    GammaParams next;
    next.po = fit_po_weighted(fit.weights, gamma.po, opts.outcome).params;
    next.miss = fit_logistic_weighted(missingness_design(fit.weights), gamma.miss, opts.missingness).alpha;

    const double change = (next.packed() - gamma.packed()).cwiseAbs().sum();
    gamma = std::move(next);
    const double ll = observed_data_loglik(gamma, ds);
    record_ascent(fit, ll, opts.audit);
    fit.loglik_trace.push_back(ll);
    fit.iterations = t;
    if (change < opts.outer_tol) {
      fit.converged = true;
      return gamma;
    }
  }
  throw FitError(FitErrorKind::NonConvergence, "em",
                 "no convergence in " + std::to_string(opts.max_outer) + " outer iterations");
}

}  // namespace detail

namespace detail {

// EmFit for a boundary solution; `fit` carries the trace of the failed run.
inline EmFit boundary_fit(EmFit fit, const OrdinalDataset& ds, const BoundaryLimit& lim, const EmOptions& opts) {
  const Index m1 = lim.outcome.params.size();
  fit.boundary = lim.side;
  fit.converged = false;
  fit.gamma.po = lim.outcome.params;
  fit.gamma.miss.alpha = VectorXd::Constant(ds.num_missingness_covariates() + 2, std::numeric_limits<double>::quiet_NaN());
  fit.boundary_alpha = lim.missingness.alpha.alpha;
  record_ascent(fit, lim.loglik, opts.audit);
  fit.loglik_trace.push_back(lim.loglik);
  // Degenerate weights: one at the extreme category for every missing subject.
  const int c = lim.side == BoundarySide::Lowest ? 1 : ds.num_categories();
  for (const auto& g : fit.weights.groups) {
    if (!g.missing) continue;
    fit.weights.weight.segment(g.first_row, g.num_rows).setZero();
    fit.weights.weight(g.first_row + c - 1) = 1.0;
  }
  record_weights(fit, fit.weights, opts.audit);
  set_nan_inference(fit);
  try {
    const WaldInference inf = se_and_ci(lim.outcome.neg_hessian, lim.outcome.params.packed(), opts.ci_level);
    fit.covariance.topLeftCorner(m1, m1) = inf.covariance;
    fit.se.head(m1) = inf.se;
    fit.ci_lower.head(m1) = inf.ci_lower;
    fit.ci_upper.head(m1) = inf.ci_upper;
  } catch (const FitError& e) {
    fit.covariance_error = e.what();
  }
  return fit;
}

}  // namespace detail

/// Full EM fit with Louis standard errors. Throws FitError when an inner fit
/// fails (submodel "outcome" or "missingness") or the outer loop does not
/// converge within `max_outer` iterations (submodel "em").
inline EmFit em_fit(const OrdinalDataset& ds, const EmOptions& opts = {}) {
  if (!(opts.outer_tol > 0.0) || opts.max_outer < 1)
    throw std::invalid_argument("EM tolerances must be positive");
  if (!ds.all_categories_observed())
    throw FitError(FitErrorKind::Degenerate, "outcome",
                   "every category must be observed at least once");
  EmFit fit;
  fit.weights = augment_dataset(ds);

  if (ds.num_missing() == 0) {
    // Weights are all one and the outcome model decouples; R == 0 leaves alpha
    // without a finite MLE.
    const PoFitResult po = fit_po_weighted(fit.weights, std::nullopt, opts.outcome);
    fit.gamma.po = po.params;
    fit.gamma.miss.alpha =
        VectorXd::Constant(ds.num_missingness_covariates() + 2, std::numeric_limits<double>::quiet_NaN());
    fit.missingness_degenerate = true;
    fit.iterations = 1;
    fit.converged = true;
    fit.loglik_trace.push_back(po.loglik);
    detail::record_weights(fit, fit.weights, opts.audit);
    detail::set_nan_inference(fit);
    try {
      const WaldInference inf = se_and_ci(po.neg_hessian, po.params.packed(), opts.ci_level);
      fit.covariance.topLeftCorner(po.params.size(), po.params.size()) = inf.covariance;
      fit.se.head(po.params.size()) = inf.se;
      fit.ci_lower.head(po.params.size()) = inf.ci_lower;
      fit.ci_upper.head(po.params.size()) = inf.ci_upper;
    } catch (const FitError& e) {
      fit.covariance_error = e.what();
    }
    return fit;
  }

  const GammaParams start = detail::em_start(ds, opts);
  GammaParams gamma;
  try {
    gamma = detail::em_run(ds, start, opts, fit);
  } catch (const FitError& first) {
    if (first.kind() != FitErrorKind::Separation && first.kind() != FitErrorKind::NonConvergence) throw;
    // The default start can lie in the basin of a boundary ridge while an
    // interior maximum exists elsewhere; keep the best converged restart.
    std::optional<EmFit> best;
    std::optional<GammaParams> best_gamma;
    std::vector<std::vector<double>> failed_traces;
    for (double slope : opts.restart_response_slopes) {
      GammaParams g = start;
      g.miss.alpha(g.miss.size() - 1) = slope;
      EmFit trial;
      trial.weights = augment_dataset(ds);
      try {
        GammaParams got = detail::em_run(ds, g, opts, trial);
        if (!best || trial.loglik_trace.back() > best->loglik_trace.back()) {
          best = std::move(trial);
          best_gamma = std::move(got);
        }
      } catch (const FitError& e) {
        if (e.kind() != FitErrorKind::Separation && e.kind() != FitErrorKind::NonConvergence) throw;
        failed_traces.push_back(std::move(trial.loglik_trace));
      }
    }
    if (!best) {
      if (!opts.boundary_fallback) throw;
      double reached = fit.loglik_trace.empty() ? -std::numeric_limits<double>::infinity()
                                                : *std::max_element(fit.loglik_trace.begin(), fit.loglik_trace.end());
      for (const auto& t : failed_traces)
        if (!t.empty()) reached = std::max(reached, *std::max_element(t.begin(), t.end()));
      std::optional<BoundaryLimit> lim;
      for (auto side : {BoundarySide::Lowest, BoundarySide::Highest}) {
        try {
          BoundaryLimit b = boundary_limit(ds, side, opts);
          if (!lim || b.loglik > lim->loglik) lim = std::move(b);
        } catch (const FitError&) {
        }
      }
      if (!lim || lim->loglik < reached - 1e-8) throw;
      return detail::boundary_fit(std::move(fit), ds, *lim, opts);
    }
    best->max_ascent_violation = std::max(best->max_ascent_violation, fit.max_ascent_violation);
    best->max_weight_sum_error = std::max(best->max_weight_sum_error, fit.max_weight_sum_error);
    best->observed_weights_exact = best->observed_weights_exact && fit.observed_weights_exact;
    fit = std::move(*best);
    fit.restarts = static_cast<int>(opts.restart_response_slopes.size());
    gamma = *best_gamma;
  }

  fit.gamma = gamma;
  update_weights(gamma, fit.weights);
  detail::record_weights(fit, fit.weights, opts.audit);
  try {
    detail::attach_inference(fit, louis_information(gamma, fit.weights), opts.ci_level);
  } catch (const FitError& e) {
    detail::set_nan_inference(fit);
    fit.covariance_error = e.what();
  }
  return fit;
}

}  // namespace pomnar
