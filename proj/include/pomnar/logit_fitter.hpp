#pragma once

// Weighted binary logistic regression for the missingness indicator R with
// design z = (1, w, y): intercept, missingness covariates, numeric response code.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "pomnar/data_model.hpp"
#include "pomnar/errors.hpp"
#include "pomnar/po_fitter.hpp"

namespace pomnar {

struct LogisticDesignRow {
  VectorXd z;
  int r = 0;
  double weight = 1.0;
};

/// Dense view of a weighted logistic design: one row of Z per observation.
struct LogisticDesign {
  MatrixXd z;
  VectorXd r;
  VectorXd weight;

  Index size() const { return z.rows(); }
};

inline LogisticDesign make_design(const std::vector<LogisticDesignRow>& rows) {
  LogisticDesign d;
  const auto n = static_cast<Index>(rows.size());
  const Index k = n ? rows.front().z.size() : 0;
  d.z.resize(n, k);
  d.r.resize(n);
  d.weight.resize(n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.z.size() != k) throw DataError("ragged covariates in logistic design");
    d.z.row(i) = row.z.transpose();
    d.r(i) = row.r;
    d.weight(i) = row.weight;
  }
  return d;
}

/// Missingness design of an augmented dataset: z = (1, w, y), outcome r, and
/// the current E-step weights.
inline LogisticDesign missingness_design(const AugmentedDataset& aug) {
  LogisticDesign d;
  const Index n = aug.num_rows();
  const Index q = aug.w.cols();
  d.z.resize(n, q + 2);
  d.z.col(0).setOnes();
  d.z.middleCols(1, q) = aug.w;
  d.z.col(q + 1) = aug.y.cast<double>();
  d.r = aug.r.cast<double>();
  d.weight = aug.weight;
  return d;
}

/// P(R = 1 | z) = exp(z'alpha) / (1 + exp(z'alpha)).
inline double logistic_prob(const MissingnessParams& alpha, const VectorXd& z) {
  if (alpha.size() != z.size()) throw DataError("logistic_prob: dimension mismatch");
  return detail::sigmoid(alpha.alpha.dot(z));
}

namespace detail {

// log(1 + exp(t)) without overflow.
inline double log1pexp(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

}  // namespace detail

/// Weighted Bernoulli log-likelihood sum w [r eta - log(1 + e^eta)].
inline double logit_log_likelihood(const MissingnessParams& alpha, const LogisticDesign& d) {
  const VectorXd eta = d.z * alpha.alpha;
  double ll = 0.0;
  for (Index i = 0; i < d.size(); ++i)
    if (d.weight(i) != 0.0) ll += d.weight(i) * (d.r(i) * eta(i) - detail::log1pexp(eta(i)));
  return ll;
}

/// sum w (r - p) z
inline VectorXd logit_score(const MissingnessParams& alpha, const LogisticDesign& d) {
  const VectorXd eta = d.z * alpha.alpha;
  VectorXd resid(d.size());
  for (Index i = 0; i < d.size(); ++i)
    resid(i) = d.weight(i) * (d.r(i) - detail::sigmoid(eta(i)));
  return d.z.transpose() * resid;
}

/// sum w p (1 - p) z z'
inline MatrixXd logit_neg_hessian(const MissingnessParams& alpha, const LogisticDesign& d) {
  const VectorXd eta = d.z * alpha.alpha;
  VectorXd v(d.size());
  for (Index i = 0; i < d.size(); ++i) {
    const double p = detail::sigmoid(eta(i));
    v(i) = d.weight(i) * p * (1.0 - p);
  }
  return d.z.transpose() * v.asDiagonal() * d.z;
}

struct LogisticFitResult {
  MissingnessParams alpha;
  MatrixXd neg_hessian;
  double loglik = 0.0;
  double score_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Newton-Raphson (IRLS) with step-halving.
inline LogisticFitResult fit_logistic_weighted(const LogisticDesign& d,
                                               const std::optional<MissingnessParams>& init = std::nullopt,
                                               const NewtonOptions& opts = {}) {
  const Index k = d.z.cols();
  double w1 = 0.0, w0 = 0.0;
  for (Index i = 0; i < d.size(); ++i) (d.r(i) > 0.5 ? w1 : w0) += d.weight(i);
  if (!(w1 > 0.0) || !(w0 > 0.0))
    throw FitError(FitErrorKind::Degenerate, "missingness",
                   "both outcomes need positive weight (R=1: " + std::to_string(w1) +
                       ", R=0: " + std::to_string(w0) + ")");

  MissingnessParams alpha{VectorXd::Zero(k)};
  if (init && init->size() == k && init->alpha.allFinite()) alpha = *init;
  double ll = logit_log_likelihood(alpha, d);

  LogisticFitResult res;
  for (int iter = 0;; ++iter) {
    const VectorXd grad = logit_score(alpha, d);
    const MatrixXd neg_h = logit_neg_hessian(alpha, d);
    res.score_norm = grad.cwiseAbs().maxCoeff();
    res.iterations = iter;
    const VectorXd dir = detail::newton_direction(neg_h, grad);
    // A vanishing score with a non-vanishing Newton step means the curvature
    // is collapsing too (separation), not that we reached an optimum.
    if (res.score_norm < opts.score_tol && dir.cwiseAbs().maxCoeff() < opts.newton_step_tol) {
      res.converged = true;
      res.neg_hessian = neg_h;
      break;
    }
    if (alpha.alpha.norm() > opts.separation_norm)
      throw FitError(FitErrorKind::Separation, "missingness",
                     "coefficient norm exceeded " + std::to_string(opts.separation_norm));
    if (iter >= opts.max_iter)
      throw FitError(FitErrorKind::NonConvergence, "missingness",
                     "Newton-Raphson did not converge in " + std::to_string(opts.max_iter) +
                         " iterations");

    const double slack = 1e-12 * std::max(1.0, std::abs(ll));
    double t = 1.0;
    bool accepted = false;
    VectorXd step;
    for (int h = 0; h <= opts.max_halvings; ++h, t *= 0.5) {
      step = t * dir;
      MissingnessParams cand{alpha.alpha + step};
      const double ll_cand = logit_log_likelihood(cand, d);
      if (std::isfinite(ll_cand) && ll_cand >= ll - slack) {
        alpha = std::move(cand);
        ll = ll_cand;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (dir.cwiseAbs().maxCoeff() * t < opts.step_tol) {
        res.converged = true;
        res.neg_hessian = neg_h;
        break;
      }
      throw FitError(FitErrorKind::NonConvergence, "missingness",
                     "step-halving found no ascent step");
    }
    if (step.cwiseAbs().maxCoeff() < opts.step_tol) {
      res.score_norm = logit_score(alpha, d).cwiseAbs().maxCoeff();
      res.neg_hessian = logit_neg_hessian(alpha, d);
      res.iterations = iter + 1;
      res.converged = true;
      break;
    }
  }
  res.alpha = alpha;
  res.loglik = ll;
  return res;
}

inline LogisticFitResult fit_logistic_weighted(const std::vector<LogisticDesignRow>& rows,
                                               const std::optional<MissingnessParams>& init = std::nullopt,
                                               const NewtonOptions& opts = {}) {
  return fit_logistic_weighted(make_design(rows), init, opts);
}

}  // namespace pomnar
