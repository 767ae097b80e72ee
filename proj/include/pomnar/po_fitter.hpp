#pragma once

// Weighted maximum likelihood for the cumulative-logit proportional-odds model.
//
// Canonical (descending) parameterization:
//     logit P(Y > j | x) = theta_j + x' beta,   j = 1..J-1
// so valid cut-points satisfy theta_1 > theta_2 > ... > theta_{J-1}.
// The ascending form logit P(Y <= j | x) = theta_j + x' beta is the same model
// with (theta, beta) -> (-theta, -beta).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "pomnar/data_model.hpp"
#include "pomnar/errors.hpp"

namespace pomnar {

enum class Link { Descending, Ascending };

namespace detail {

inline double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

inline PoParams to_descending(const PoParams& params, Link link) {
  if (link == Link::Descending) return params;
  return {-params.theta, -params.beta};
}

// Probability of category k (1-based) given the descending linear predictors
// eta_j = theta_j + x'beta. The end categories use the complementary sigmoid
// directly so tiny probabilities keep full relative precision.
inline double category_prob(const VectorXd& theta, double xb, int k) {
  const auto J = static_cast<int>(theta.size()) + 1;
  if (k == 1) return sigmoid(-(theta(0) + xb));
  if (k == J) return sigmoid(theta(J - 2) + xb);
  return sigmoid(theta(k - 2) + xb) - sigmoid(theta(k - 1) + xb);
}

inline bool cuts_feasible(const VectorXd& theta) {
  for (Index j = 0; j < theta.size(); ++j) {
    if (!std::isfinite(theta(j))) return false;
    if (j > 0 && !(theta(j - 1) > theta(j))) return false;
  }
  return true;
}

// Weighted log-likelihood, or nullopt when some used category probability is
// not strictly positive.
inline std::optional<double> try_po_log_likelihood(const PoParams& params,
                                                   const AugmentedDataset& aug) {
  if (!cuts_feasible(params.theta) || !params.beta.allFinite()) return std::nullopt;
  const VectorXd xb = aug.x * params.beta;
  double ll = 0.0;
  for (Index i = 0; i < aug.num_rows(); ++i) {
    const double w = aug.weight(i);
    const double pk = category_prob(params.theta, xb(i), aug.y(i));
    if (!(pk > 0.0)) return std::nullopt;
    if (w != 0.0) ll += w * std::log(pk);
  }
  return ll;
}

}  // namespace detail

/// (J-1) x (J-1+p) derivative of the descending linear predictors with respect
/// to (theta, beta): identity on the cut-points, x' repeated in the slope block.
/// Under the ascending link the linear predictors of P(Y > j) carry -x'.
inline MatrixXd kappa_matrix(const VectorXd& x, Index num_cuts, Link link = Link::Descending) {
  MatrixXd k = MatrixXd::Zero(num_cuts, num_cuts + x.size());
  k.leftCols(num_cuts).setIdentity();
  const double sign = link == Link::Descending ? 1.0 : -1.0;
  for (Index j = 0; j < num_cuts; ++j) k.row(j).tail(x.size()) = sign * x.transpose();
  return k;
}

/// Category probabilities (pi_1..pi_J) at covariate vector x.
inline VectorXd category_probs(const PoParams& params, const VectorXd& x,
                               Link link = Link::Descending) {
  if (params.beta.size() != x.size())
    throw DataError("category_probs: covariate length does not match slopes");
  const PoParams d = detail::to_descending(params, link);
  const auto J = static_cast<int>(d.theta.size()) + 1;
  const double xb = d.beta.dot(x);
  VectorXd pi(J);
  for (int k = 1; k <= J; ++k) {
    pi(k - 1) = detail::category_prob(d.theta, xb, k);
    if (!(pi(k - 1) > 0.0))
      throw FitError(FitErrorKind::Domain, "outcome",
                     "category probability pi_" + std::to_string(k) + " is not positive");
  }
  return pi;
}

/// Sum over rows of weight * log pi_{row, y}.
inline double po_log_likelihood(const PoParams& params, const AugmentedDataset& aug) {
  auto ll = detail::try_po_log_likelihood(params, aug);
  if (!ll) throw FitError(FitErrorKind::Domain, "outcome", "non-positive category probability");
  return *ll;
}

namespace detail {

// Per-row derivatives of log pi_k with respect to the two linear predictors it
// touches (eta_{k-1}, eta_k). Missing ends (k == 1 or k == J) get zero.
struct RowEtaDerivs {
  double u_lo = 0.0, u_hi = 0.0;  // d l / d eta_{k-1}, d l / d eta_k
  double h_lo = 0.0, h_hi = 0.0, h_cross = 0.0;
};

inline RowEtaDerivs row_eta_derivs(const VectorXd& theta, double xb, int k) {
  const auto J = static_cast<int>(theta.size()) + 1;
  const double pk = category_prob(theta, xb, k);
  if (!(pk > 0.0))
    throw FitError(FitErrorKind::Domain, "outcome", "non-positive category probability");
  RowEtaDerivs out;
  double d_lo = 0.0, d_hi = 0.0, e_lo = 0.0, e_hi = 0.0;
  if (k > 1) {
    const double g = sigmoid(theta(k - 2) + xb);
    d_lo = g * (1.0 - g);
    e_lo = d_lo * (1.0 - 2.0 * g);
  }
  if (k < J) {
    const double g = sigmoid(theta(k - 1) + xb);
    d_hi = g * (1.0 - g);
    e_hi = d_hi * (1.0 - 2.0 * g);
  }
  // pi_k = g_{k-1} - g_k
  out.u_lo = d_lo / pk;
  out.u_hi = -d_hi / pk;
  out.h_lo = e_lo / pk - out.u_lo * out.u_lo;
  out.h_hi = -e_hi / pk - out.u_hi * out.u_hi;
  out.h_cross = -out.u_lo * out.u_hi;
  return out;
}

// Accumulates the kappa' u contraction and kappa' H kappa for one row.
inline void add_row(const RowEtaDerivs& dr, int k, Index num_cuts, const auto& x, double w,
                    VectorXd* score, MatrixXd* hess) {
  const Index p = x.size();
  const Index lo = k - 2, hi = k - 1;  // cut indices, valid when in [0, num_cuts)
  const bool has_lo = lo >= 0, has_hi = hi < num_cuts;
  if (score) {
    if (has_lo) (*score)(lo) += w * dr.u_lo;
    if (has_hi) (*score)(hi) += w * dr.u_hi;
    score->tail(p) += (w * (dr.u_lo + dr.u_hi)) * x.transpose();
  }
  if (hess) {
    auto& H = *hess;
    const double a = w * dr.h_lo, b = w * dr.h_hi, c = w * dr.h_cross;
    if (has_lo) H(lo, lo) += a;
    if (has_hi) H(hi, hi) += b;
    if (has_lo && has_hi) {
      H(lo, hi) += c;
      H(hi, lo) += c;
    }
    const double s_lo = a + c, s_hi = b + c;
    if (has_lo) {
      H.row(lo).tail(p) += s_lo * x;
      H.col(lo).tail(p) += s_lo * x.transpose();
    }
    if (has_hi) {
      H.row(hi).tail(p) += s_hi * x;
      H.col(hi).tail(p) += s_hi * x.transpose();
    }
    H.bottomRightCorner(p, p).noalias() += (a + b + 2.0 * c) * x.transpose() * x;
  }
}

inline void po_derivatives(const PoParams& params, const AugmentedDataset& aug, VectorXd* score,
                           MatrixXd* hess) {
  const Index m = params.size();
  const Index num_cuts = params.theta.size();
  if (score) score->setZero(m);
  if (hess) hess->setZero(m, m);
  if (!cuts_feasible(params.theta))
    throw FitError(FitErrorKind::Domain, "outcome", "cut-points are not strictly decreasing");
  const VectorXd xb = aug.x * params.beta;
  for (Index i = 0; i < aug.num_rows(); ++i) {
    const double w = aug.weight(i);
    if (w == 0.0) continue;
    const int k = aug.y(i);
    add_row(row_eta_derivs(params.theta, xb(i), k), k, num_cuts, aug.x.row(i), w, score, hess);
  }
}

}  // namespace detail

/// Gradient of po_log_likelihood with respect to (theta, beta).
inline VectorXd po_score(const PoParams& params, const AugmentedDataset& aug) {
  VectorXd s;
  detail::po_derivatives(params, aug, &s, nullptr);
  return s;
}

/// Negative Hessian of po_log_likelihood with respect to (theta, beta).
inline MatrixXd po_neg_hessian(const PoParams& params, const AugmentedDataset& aug) {
  MatrixXd h;
  detail::po_derivatives(params, aug, nullptr, &h);
  return -h;
}

/// Complete-data score of a single augmented row (weight not applied).
inline VectorXd po_row_score(const PoParams& params, const AugmentedDataset& aug, Index row) {
  VectorXd s = VectorXd::Zero(params.size());
  const int k = aug.y(row);
  const double xb = aug.x.row(row).dot(params.beta);
  detail::add_row(detail::row_eta_derivs(params.theta, xb, k), k, params.theta.size(),
                  aug.x.row(row), 1.0, &s, nullptr);
  return s;
}

struct NewtonOptions {
  double score_tol = 1e-8;
  double step_tol = 1e-10;
  double newton_step_tol = 1e-4;  // max |Newton step| required alongside a small score
  int max_iter = 50;
  int max_halvings = 20;
  double separation_norm = 30.0;
};

struct PoFitResult {
  PoParams params;
  double loglik = 0.0;
  double score_norm = 0.0;  // max |score|
  int iterations = 0;
  bool converged = false;
  MatrixXd neg_hessian;
};

/// Feasible starting point: theta_j = logit of the weighted proportion of
/// responses above j, beta = 0.
inline PoParams default_po_start(const AugmentedDataset& aug) {
  const int J = aug.num_categories;
  VectorXd mass = VectorXd::Zero(J);
  for (Index i = 0; i < aug.num_rows(); ++i) mass(aug.y(i) - 1) += aug.weight(i);
  const double total = mass.sum();
  PoParams start{VectorXd(J - 1), VectorXd::Zero(aug.x.cols())};
  double above = total;
  for (int j = 1; j < J; ++j) {
    above -= mass(j - 1);
    const double prop = std::clamp(above / total, 1e-6, 1.0 - 1e-6);
    start.theta(j - 1) = std::log(prop / (1.0 - prop));
  }
  // Keep strict monotonicity when a middle category carries little mass.
  for (int j = 1; j < J - 1; ++j)
    if (!(start.theta(j) < start.theta(j - 1))) start.theta(j) = start.theta(j - 1) - 1e-3;
  return start;
}

namespace detail {

// Newton direction H^{-1} g for a negative Hessian H; falls back to a ridged
// system when H is not numerically positive definite.
inline VectorXd newton_direction(const MatrixXd& neg_hessian, const VectorXd& grad) {
  Eigen::LLT<MatrixXd> llt(neg_hessian);
  if (llt.info() == Eigen::Success) {
    VectorXd d = llt.solve(grad);
    if (d.allFinite()) return d;
  }
  const double scale = std::max(1.0, neg_hessian.diagonal().cwiseAbs().maxCoeff());
  for (double ridge = 1e-8; ridge < 1e8; ridge *= 100.0) {
    MatrixXd a = neg_hessian;
    a.diagonal().array() += ridge * scale;
    Eigen::LLT<MatrixXd> r(a);
    if (r.info() == Eigen::Success) return r.solve(grad);
  }
  return grad / scale;
}

}  // namespace detail

/// Newton-Raphson with step-halving for the weighted proportional-odds model.
inline PoFitResult fit_po_weighted(const AugmentedDataset& aug,
                                   const std::optional<PoParams>& init = std::nullopt,
                                   const NewtonOptions& opts = {}) {
  const int J = aug.num_categories;
  const Index p = aug.x.cols();
  {
    VectorXd mass = VectorXd::Zero(J);
    for (Index i = 0; i < aug.num_rows(); ++i) mass(aug.y(i) - 1) += aug.weight(i);
    for (int k = 0; k < J; ++k)
      if (!(mass(k) > 0.0))
        throw FitError(FitErrorKind::Degenerate, "outcome",
                       "category " + std::to_string(k + 1) + " has zero total weight");
  }

  PoParams params = default_po_start(aug);
  auto ll = detail::try_po_log_likelihood(params, aug);
  if (init && init->theta.size() == J - 1 && init->beta.size() == p) {
    if (auto ll_init = detail::try_po_log_likelihood(*init, aug)) {
      params = *init;
      ll = ll_init;
    }
  }
  if (!ll) throw FitError(FitErrorKind::Domain, "outcome", "no feasible starting point");

  PoFitResult res;
  VectorXd grad;
  MatrixXd hess;
  for (int iter = 0;; ++iter) {
    detail::po_derivatives(params, aug, &grad, &hess);
    const MatrixXd neg_h = -hess;
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
    if (params.packed().norm() > opts.separation_norm)
      throw FitError(FitErrorKind::Separation, "outcome",
                     "parameter norm exceeded " + std::to_string(opts.separation_norm));
    if (iter >= opts.max_iter)
      throw FitError(FitErrorKind::NonConvergence, "outcome",
                     "Newton-Raphson did not converge in " + std::to_string(opts.max_iter) +
                         " iterations");

    const VectorXd base = params.packed();
    const double slack = 1e-12 * std::max(1.0, std::abs(*ll));
    double t = 1.0;
    bool accepted = false;
    VectorXd step;
    for (int h = 0; h <= opts.max_halvings; ++h, t *= 0.5) {
      step = t * dir;
      PoParams cand = PoParams::unpack(base + step, J - 1);
      auto ll_cand = detail::try_po_log_likelihood(cand, aug);
      if (ll_cand && *ll_cand >= *ll - slack) {
        params = std::move(cand);
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
      throw FitError(FitErrorKind::NonConvergence, "outcome", "step-halving found no ascent step");
    }
    if (step.cwiseAbs().maxCoeff() < opts.step_tol) {
      detail::po_derivatives(params, aug, &grad, &hess);
      res.score_norm = grad.cwiseAbs().maxCoeff();
      res.iterations = iter + 1;
      res.converged = true;
      res.neg_hessian = -hess;
      break;
    }
  }
  res.params = params;
  res.loglik = *ll;
  return res;
}

/// Fits under the requested link; the ascending result is the mapped
/// descending optimum.
inline PoFitResult fit_po_weighted(const AugmentedDataset& aug, Link link,
                                   const std::optional<PoParams>& init = std::nullopt,
                                   const NewtonOptions& opts = {}) {
  std::optional<PoParams> start;
  if (init) start = detail::to_descending(*init, link);
  PoFitResult res = fit_po_weighted(aug, start, opts);
  if (link == Link::Ascending) {
    res.params = {-res.params.theta, -res.params.beta};
    // The Jacobian of the sign flip is -I, which leaves the Hessian unchanged.
  }
  return res;
}

}  // namespace pomnar
