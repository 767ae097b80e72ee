#pragma once

// Reference computations used only by tests. Nothing here calls into the
// library's likelihood code: each oracle works from the model definition.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pomnar/data_model.hpp"

namespace pomnar::testing {

using Objective = std::function<double(const Eigen::VectorXd&)>;

inline double logistic(double t) { return 1.0 / (1.0 + std::exp(-t)); }

/// pi_k from P(Y > j) = logistic(theta_j + x'beta), by plain differences.
inline std::vector<double> naive_probs(const Eigen::VectorXd& theta, const Eigen::VectorXd& beta,
                                       const Eigen::VectorXd& x) {
  const auto J = theta.size() + 1;
  std::vector<double> above(static_cast<std::size_t>(J + 1));
  above[0] = 1.0;
  above[static_cast<std::size_t>(J)] = 0.0;
  for (Eigen::Index j = 1; j < J; ++j)
    above[static_cast<std::size_t>(j)] = logistic(theta(j - 1) + x.dot(beta));
  std::vector<double> pi(static_cast<std::size_t>(J));
  for (Eigen::Index k = 0; k < J; ++k)
    pi[static_cast<std::size_t>(k)] = above[static_cast<std::size_t>(k)] - above[static_cast<std::size_t>(k + 1)];
  return pi;
}

/// Weighted PO log-likelihood over augmented rows; -inf when infeasible.
inline double naive_po_loglik(const Eigen::VectorXd& packed, const AugmentedDataset& aug) {
  const auto J = aug.num_categories;
  const Eigen::VectorXd theta = packed.head(J - 1);
  const Eigen::VectorXd beta = packed.tail(packed.size() - (J - 1));
  double ll = 0.0;
  for (Eigen::Index i = 0; i < aug.num_rows(); ++i) {
    const auto pi = naive_probs(theta, beta, aug.x.row(i).transpose());
    const double pk = pi[static_cast<std::size_t>(aug.y(i) - 1)];
    if (!(pk > 0.0)) return -INFINITY;
    ll += aug.weight(i) * std::log(pk);
  }
  return ll;
}

/// Observed-data log-likelihood of the selection model, by direct summation.
/// gamma is packed (theta, beta, alpha) with alpha = (a0, a_w, a_y).
inline double naive_observed_loglik(const Eigen::VectorXd& gamma, const OrdinalDataset& ds) {
  const int J = ds.num_categories();
  const auto p = ds.num_outcome_covariates();
  const auto q = ds.num_missingness_covariates();
  const Eigen::VectorXd theta = gamma.head(J - 1);
  const Eigen::VectorXd beta = gamma.segment(J - 1, p);
  const Eigen::VectorXd alpha = gamma.tail(q + 2);
  double ll = 0.0;
  for (Eigen::Index i = 0; i < ds.size(); ++i) {
    const auto pi = naive_probs(theta, beta, ds.outcome_covariates().row(i).transpose());
    for (double v : pi)
      if (!(v > 0.0)) return -INFINITY;
    auto p_missing = [&](int y) {
      double eta = alpha(0) + alpha(q + 1) * y;
      for (Eigen::Index k = 0; k < q; ++k) eta += alpha(k + 1) * ds.missingness_covariates()(i, k);
      return logistic(eta);
    };
    const auto& yi = ds.responses()[static_cast<std::size_t>(i)];
    if (yi) {
      ll += std::log(pi[static_cast<std::size_t>(*yi - 1)]) + std::log(1.0 - p_missing(*yi));
    } else {
      double s = 0.0;
      for (int j = 1; j <= J; ++j) s += pi[static_cast<std::size_t>(j - 1)] * p_missing(j);
      ll += std::log(s);
    }
  }
  return ll;
}

inline Eigen::VectorXd central_gradient(const Objective& f, const Eigen::VectorXd& v,
                                        double rel = 1e-6) {
  Eigen::VectorXd g(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double h = rel * std::max(1.0, std::abs(v(i)));
    Eigen::VectorXd a = v, b = v;
    a(i) += h;
    b(i) -= h;
    g(i) = (f(a) - f(b)) / (2.0 * h);
  }
  return g;
}

inline Eigen::MatrixXd central_hessian(const Objective& f, const Eigen::VectorXd& v,
                                       double rel = 1e-4) {
  const auto m = v.size();
  Eigen::MatrixXd H(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const double hi = rel * std::max(1.0, std::abs(v(i)));
      const double hj = rel * std::max(1.0, std::abs(v(j)));
      auto at = [&](double si, double sj) {
        Eigen::VectorXd u = v;
        u(i) += si * hi;
        u(j) += sj * hj;
        return f(u);
      };
      H(i, j) = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * hi * hj);
      H(j, i) = H(i, j);
    }
  }
  return H;
}

/// Nelder-Mead maximizer with restarts from the incumbent.
inline Eigen::VectorXd nelder_mead_max(const Objective& f, Eigen::VectorXd x0, double step,
                                       int max_evals = 20000, double ftol = 1e-13) {
  const auto n = x0.size();
  auto neg = [&](const Eigen::VectorXd& x) {
    const double v = f(x);
    return std::isfinite(v) ? -v : INFINITY;
  };
  int evals = 0;
  for (int restart = 0; restart < 6; ++restart) {
    std::vector<Eigen::VectorXd> s(static_cast<std::size_t>(n + 1), x0);
    std::vector<double> fv(static_cast<std::size_t>(n + 1));
    for (Eigen::Index i = 0; i < n; ++i) s[static_cast<std::size_t>(i + 1)](i) += step;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) fv[i] = neg(s[i]), ++evals;
    while (evals < max_evals) {
      std::vector<std::size_t> idx(s.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
      const auto best = idx.front(), worst = idx.back(), second = idx[idx.size() - 2];
      if (std::abs(fv[worst] - fv[best]) <= ftol * (1.0 + std::abs(fv[best]))) break;
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (std::size_t i = 0; i + 1 < idx.size(); ++i) centroid += s[idx[i]];
      centroid /= static_cast<double>(n);
      const Eigen::VectorXd xr = centroid + (centroid - s[worst]);
      const double fr = neg(xr);
      ++evals;
      if (fr < fv[best]) {
        const Eigen::VectorXd xe = centroid + 2.0 * (centroid - s[worst]);
        const double fe = neg(xe);
        ++evals;
        if (fe < fr) s[worst] = xe, fv[worst] = fe;
        else s[worst] = xr, fv[worst] = fr;
      } else if (fr < fv[second]) {
        s[worst] = xr, fv[worst] = fr;
      } else {
        const Eigen::VectorXd xc = centroid + 0.5 * (s[worst] - centroid);
        const double fc = neg(xc);
        ++evals;
        if (fc < fv[worst]) {
          s[worst] = xc, fv[worst] = fc;
        } else {
          for (auto i : idx) {
            if (i == best) continue;
            s[i] = s[best] + 0.5 * (s[i] - s[best]);
            fv[i] = neg(s[i]);
            ++evals;
          }
        }
      }
    }
    const auto it = std::min_element(fv.begin(), fv.end());
    x0 = s[static_cast<std::size_t>(it - fv.begin())];
    step *= 0.3;
  }
  return x0;
}

/// Unweighted/weighted logistic regression by iteratively reweighted least
/// squares on the working response.
inline Eigen::VectorXd irls_logistic(const Eigen::MatrixXd& Z, const Eigen::VectorXd& r,
                                     const Eigen::VectorXd& prior_weight, int iters = 100) {
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(Z.cols());
  for (int it = 0; it < iters; ++it) {
    const Eigen::VectorXd eta = Z * beta;
    Eigen::VectorXd w(Z.rows()), work(Z.rows());
    for (Eigen::Index i = 0; i < Z.rows(); ++i) {
      const double mu = logistic(eta(i));
      const double var = mu * (1.0 - mu);
      w(i) = prior_weight(i) * var;
      work(i) = eta(i) + (r(i) - mu) / var;
    }
    const Eigen::MatrixXd A = Z.transpose() * w.asDiagonal() * Z;
    const Eigen::VectorXd next = A.ldlt().solve(Z.transpose() * w.asDiagonal() * work);
    const double change = (next - beta).cwiseAbs().maxCoeff();
    beta = next;
    if (change < 1e-13) break;
  }
  return beta;
}

/// Small random dataset: J categories, p outcome covariates, missingness
/// covariates equal to x, MNAR missingness through the response code.
struct RandomInstance {
  OrdinalDataset data;
  Eigen::VectorXd gamma_true;
};

inline RandomInstance random_mnar_instance(std::mt19937_64& rng, int n, int J, int p,
                                           double missing_scale = 1.0) {
  std::normal_distribution<double> norm(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd theta(J - 1);
  double t = 1.0 + 0.5 * unif(rng);
  for (int j = 0; j < J - 1; ++j) {
    theta(j) = t;
    t -= 0.8 + unif(rng);
  }
  Eigen::VectorXd beta(p);
  for (int k = 0; k < p; ++k) beta(k) = 0.8 * norm(rng);
  Eigen::VectorXd alpha(p + 2);
  alpha(0) = -0.5 + 0.5 * norm(rng);
  for (int k = 0; k < p; ++k) alpha(k + 1) = 0.5 * norm(rng);
  alpha(p + 1) = -0.6 * missing_scale;

  for (;;) {
    Eigen::MatrixXd x(n, p);
    std::vector<std::optional<int>> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < p; ++k) x(i, k) = norm(rng);
      const auto pi = naive_probs(theta, beta, x.row(i).transpose());
      double u = unif(rng), acc = 0.0;
      int cat = J;
      for (int k = 0; k < J; ++k) {
        acc += pi[static_cast<std::size_t>(k)];
        if (u < acc) {
          cat = k + 1;
          break;
        }
      }
      double eta = alpha(0) + alpha(p + 1) * cat;
      for (int k = 0; k < p; ++k) eta += alpha(k + 1) * x(i, k);
      if (unif(rng) >= logistic(eta)) y[static_cast<std::size_t>(i)] = cat;
    }
    try {
      OrdinalDataset ds(J, x, x, y);
      if (!ds.all_categories_observed() || ds.num_missing() == 0) continue;
      Eigen::VectorXd g(J - 1 + 2 * p + 2);
      g << theta, beta, alpha;
      return {std::move(ds), g};
    } catch (const DataError&) {
    }
  }
}

inline double max_rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]) / std::max(1.0, std::abs(b.data()[i])));
  return worst;
}

}  // namespace pomnar::testing
