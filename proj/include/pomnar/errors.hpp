#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pomnar {

/// Raised for malformed input data (bad categories, ragged covariates, ...).
class DataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FitErrorKind {
  NonConvergence,
  Degenerate,
  Separation,
  Domain,
  NotPositiveDefinite,
  Singular,
};

inline const char* to_string(FitErrorKind kind) {
  switch (kind) {
    case FitErrorKind::NonConvergence: return "non-convergence";
    case FitErrorKind::Degenerate: return "degenerate";
    case FitErrorKind::Separation: return "separation";
    case FitErrorKind::Domain: return "domain";
    case FitErrorKind::NotPositiveDefinite: return "not positive definite";
    case FitErrorKind::Singular: return "singular";
  }
  return "unknown";
}

/// Estimation failure. `submodel()` names the component that failed
/// ("outcome", "missingness", "em", "louis", ...).
class FitError : public std::runtime_error {
 public:
  FitError(FitErrorKind kind, std::string submodel, const std::string& what)
      : std::runtime_error(submodel + ": " + to_string(kind) + ": " + what),
        kind_(kind),
        submodel_(std::move(submodel)) {}

  FitErrorKind kind() const noexcept { return kind_; }
  const std::string& submodel() const noexcept { return submodel_; }

 private:
  FitErrorKind kind_;
  std::string submodel_;
};

}  // namespace pomnar
