#pragma once

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pomnar/data_model.hpp"
#include "pomnar/errors.hpp"

namespace pomnar {

/// Upper (1 + level) / 2 standard-normal quantile; 1.959964 for level 0.95.
inline double normal_critical_value(double level) {
  if (!(level >= 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must be in [0, 1)");
  if (level == 0.0) return 0.0;
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 * (1.0 + level));
}

struct WaldInference {
  MatrixXd covariance;
  VectorXd se;
  VectorXd ci_lower;
  VectorXd ci_upper;
};

/// covariance = info^{-1}, se = sqrt(diag), ci = estimate -/+ z se.
inline WaldInference se_and_ci(const MatrixXd& info, const VectorXd& estimates, double level) {
  if (info.rows() != info.cols() || info.rows() != estimates.size())
    throw std::invalid_argument("se_and_ci: dimension mismatch");
  Eigen::LLT<MatrixXd> llt(info);
  if (llt.info() != Eigen::Success)
    throw FitError(FitErrorKind::Singular, "inference", "information matrix is not invertible");
  WaldInference out;
  out.covariance = llt.solve(MatrixXd::Identity(info.rows(), info.cols()));
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  out.se = out.covariance.diagonal().cwiseSqrt();
  const double z = normal_critical_value(level);
  out.ci_lower = estimates - z * out.se;
  out.ci_upper = estimates + z * out.se;
  return out;
}

/// Two-sided p = 2 (1 - Phi(|est / se|)).
inline VectorXd wald_p_values(const VectorXd& estimates, const VectorXd& se) {
  if (estimates.size() != se.size()) throw std::invalid_argument("wald_p_values: dimension mismatch");
  VectorXd p(estimates.size());
  for (Index i = 0; i < p.size(); ++i) {
    if (!(se(i) > 0.0)) {
      p(i) = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    p(i) = std::erfc(std::abs(estimates(i) / se(i)) / std::sqrt(2.0));
  }
  return p;
}

}  // namespace pomnar
