#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pomnar/errors.hpp"

namespace pomnar {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// One unvalidated input record. An empty `w` means the missingness model
/// uses the outcome covariates `x`.
struct RawRow {
  std::string id;
  std::optional<int> y;
  std::vector<double> x;
  std::vector<double> w;
};

/// Validated ordinal data: responses in 1..J (or missing), outcome-model
/// covariates X (n x p) and missingness-model covariates W (n x q).
class OrdinalDataset {
 public:
  OrdinalDataset(int num_categories, MatrixXd x, MatrixXd w,
                 std::vector<std::optional<int>> y,
                 std::vector<std::string> ids = {})
      : num_categories_(num_categories),
        x_(std::move(x)),
        w_(std::move(w)),
        y_(std::move(y)),
        ids_(std::move(ids)) {
    if (num_categories_ < 2) throw DataError("J < 2: need at least two categories");
    const auto n = static_cast<Index>(y_.size());
    if (n < 1) throw DataError("dataset has no rows");
    if (x_.rows() != n || w_.rows() != n)
      throw DataError("ragged covariates: covariate matrix rows do not match responses");
    if (!x_.allFinite() || !w_.allFinite()) throw DataError("non-finite covariate value");
    if (ids_.empty()) {
      ids_.reserve(y_.size());
      for (Index i = 0; i < n; ++i) ids_.push_back(std::to_string(i + 1));
    } else if (static_cast<Index>(ids_.size()) != n) {
      throw DataError("id column length does not match responses");
    }
    observed_.assign(static_cast<std::size_t>(num_categories_), false);
    for (Index i = 0; i < n; ++i) {
      const auto& yi = y_[static_cast<std::size_t>(i)];
      if (!yi) {
        ++num_missing_;
        continue;
      }
      if (*yi < 1 || *yi > num_categories_)
        throw DataError("category out of range: row " + std::to_string(i + 1) + " has y=" +
                        std::to_string(*yi) + " but J=" + std::to_string(num_categories_));
      observed_[static_cast<std::size_t>(*yi - 1)] = true;
    }
    if (num_missing_ == n) throw DataError("all responses missing");
  }

  int num_categories() const noexcept { return num_categories_; }
  Index size() const noexcept { return static_cast<Index>(y_.size()); }
  Index num_outcome_covariates() const noexcept { return x_.cols(); }
  Index num_missingness_covariates() const noexcept { return w_.cols(); }
  Index num_missing() const noexcept { return num_missing_; }
  Index num_observed() const noexcept { return size() - num_missing_; }

  const MatrixXd& outcome_covariates() const noexcept { return x_; }
  const MatrixXd& missingness_covariates() const noexcept { return w_; }
  const std::vector<std::optional<int>>& responses() const noexcept { return y_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  bool is_missing(Index i) const { return !y_[static_cast<std::size_t>(i)].has_value(); }

  /// Flags for categories 1..J that occur at least once among observed rows.
  const std::vector<bool>& observed_categories() const noexcept { return observed_; }
  bool all_categories_observed() const {
    return std::all_of(observed_.begin(), observed_.end(), [](bool b) { return b; });
  }

  /// Rows with an observed response only.
  OrdinalDataset complete_cases() const {
    std::vector<Index> keep;
    for (Index i = 0; i < size(); ++i)
      if (!is_missing(i)) keep.push_back(i);
    MatrixXd x(static_cast<Index>(keep.size()), x_.cols());
    MatrixXd w(static_cast<Index>(keep.size()), w_.cols());
    std::vector<std::optional<int>> y;
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      x.row(static_cast<Index>(k)) = x_.row(keep[k]);
      w.row(static_cast<Index>(k)) = w_.row(keep[k]);
      y.push_back(y_[static_cast<std::size_t>(keep[k])]);
      ids.push_back(ids_[static_cast<std::size_t>(keep[k])]);
    }
    return {num_categories_, std::move(x), std::move(w), std::move(y), std::move(ids)};
  }

 private:
  int num_categories_;
  MatrixXd x_;
  MatrixXd w_;
  std::vector<std::optional<int>> y_;
  std::vector<std::string> ids_;
  std::vector<bool> observed_;
  Index num_missing_ = 0;
};

/// Builds a dataset from raw rows, checking shapes and category bounds.
inline OrdinalDataset validate_dataset(const std::vector<RawRow>& rows, int num_categories) {
  if (rows.empty()) throw DataError("dataset has no rows");
  if (num_categories < 2) throw DataError("J < 2: need at least two categories");
  const auto p = static_cast<Index>(rows.front().x.size());
  const bool separate_w = !rows.front().w.empty();
  const auto q = separate_w ? static_cast<Index>(rows.front().w.size()) : p;
  const auto n = static_cast<Index>(rows.size());
  MatrixXd x(n, p);
  MatrixXd w(n, q);
  std::vector<std::optional<int>> y;
  std::vector<std::string> ids;
  y.reserve(rows.size());
  ids.reserve(rows.size());
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.x.size()) != p)
      throw DataError("ragged covariates: row " + std::to_string(i + 1) + " has " +
                      std::to_string(row.x.size()) + " covariates, expected " + std::to_string(p));
    const auto& wi = separate_w ? row.w : row.x;
    if (static_cast<Index>(wi.size()) != q)
      throw DataError("ragged covariates: row " + std::to_string(i + 1) +
                      " has a missingness covariate vector of the wrong length");
    for (Index k = 0; k < p; ++k) x(i, k) = row.x[static_cast<std::size_t>(k)];
    for (Index k = 0; k < q; ++k) w(i, k) = wi[static_cast<std::size_t>(k)];
    y.push_back(row.y);
    ids.push_back(row.id.empty() ? std::to_string(i + 1) : row.id);
  }
  return {num_categories, std::move(x), std::move(w), std::move(y), std::move(ids)};
}

/// Cut-point intercepts (length J-1) and covariate slopes (length p).
struct PoParams {
  VectorXd theta;
  VectorXd beta;

  Index size() const { return theta.size() + beta.size(); }
  VectorXd packed() const {
    VectorXd v(size());
    v << theta, beta;
    return v;
  }
  static PoParams unpack(const VectorXd& v, Index num_cuts) {
    return {v.head(num_cuts), v.tail(v.size() - num_cuts)};
  }
};

/// Missingness-model coefficients ordered (intercept, covariate slopes, response slope).
struct MissingnessParams {
  VectorXd alpha;

  Index size() const { return alpha.size(); }
  double intercept() const { return alpha(0); }
  double response_slope() const { return alpha(alpha.size() - 1); }
};

/// Full parameter vector: outcome model followed by missingness model.
struct GammaParams {
  PoParams po;
  MissingnessParams miss;

  Index size() const { return po.size() + miss.size(); }
  VectorXd packed() const {
    VectorXd v(size());
    v << po.theta, po.beta, miss.alpha;
    return v;
  }
  static GammaParams unpack(const VectorXd& v, Index num_cuts, Index num_slopes) {
    GammaParams g;
    g.po.theta = v.head(num_cuts);
    g.po.beta = v.segment(num_cuts, num_slopes);
    g.miss.alpha = v.tail(v.size() - num_cuts - num_slopes);
    return g;
  }
};

struct AugmentedGroup {
  Index first_row = 0;
  Index num_rows = 0;
  bool missing = false;
};

/// Row-expanded data: an observed subject keeps one row, a missing subject is
/// replicated once per category. `groups[i]` is the contiguous row range of
/// subject i; `ids[i]` its label.
struct AugmentedDataset {
  int num_categories = 0;
  MatrixXd x;       // rows x p
  MatrixXd w;       // rows x q
  VectorXi y;       // 1..J
  VectorXi r;       // 1 if the subject's response is missing
  VectorXd weight;  // in [0, 1]
  std::vector<AugmentedGroup> groups;
  std::vector<std::string> ids;

  Index num_rows() const { return y.size(); }
  Index num_subjects() const { return static_cast<Index>(groups.size()); }

  std::optional<AugmentedGroup> find_group(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return groups[i];
    return std::nullopt;
  }

  /// Per-subject missing flags; inverse of augmentation for the pattern.
  std::vector<bool> missing_pattern() const {
    std::vector<bool> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(g.missing);
    return out;
  }
};

inline AugmentedDataset augment_dataset(const OrdinalDataset& ds) {
  const int J = ds.num_categories();
  const Index rows = ds.num_observed() + J * ds.num_missing();
  AugmentedDataset aug;
  aug.num_categories = J;
  aug.x.resize(rows, ds.num_outcome_covariates());
  aug.w.resize(rows, ds.num_missingness_covariates());
  aug.y.resize(rows);
  aug.r.resize(rows);
  aug.weight = VectorXd::Ones(rows);
  aug.groups.reserve(static_cast<std::size_t>(ds.size()));
  aug.ids = ds.ids();

  Index row = 0;
  for (Index i = 0; i < ds.size(); ++i) {
    const auto& yi = ds.responses()[static_cast<std::size_t>(i)];
    const Index count = yi ? 1 : J;
    aug.groups.push_back({row, count, !yi.has_value()});
    for (Index k = 0; k < count; ++k, ++row) {
      aug.x.row(row) = ds.outcome_covariates().row(i);
      aug.w.row(row) = ds.missingness_covariates().row(i);
      aug.y(row) = yi ? *yi : static_cast<int>(k + 1);
      aug.r(row) = yi ? 0 : 1;
    }
  }
  return aug;
}

struct WeightCheck {
  double max_group_sum_error = 0.0;  // max |sum_j w_ij - 1| over missing subjects
  bool observed_exactly_one = true;
  bool all_in_unit_interval = true;
};

inline WeightCheck check_weights(const AugmentedDataset& aug) {
  WeightCheck out;
  for (const auto& g : aug.groups) {
    const auto wg = aug.weight.segment(g.first_row, g.num_rows);
    if ((wg.array() < 0.0).any() || (wg.array() > 1.0).any()) out.all_in_unit_interval = false;
    if (g.missing)
      out.max_group_sum_error = std::max(out.max_group_sum_error, std::abs(wg.sum() - 1.0));
    else if (wg(0) != 1.0)
      out.observed_exactly_one = false;
  }
  return out;
}

}  // namespace pomnar
