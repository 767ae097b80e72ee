#pragma once

// Fit of a CSV dataset by EM or complete cases, reported as JSON and as a text
// table rendered from that JSON.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "pomnar/csv.hpp"
#include "pomnar/em_engine.hpp"
#include "pomnar/inference.hpp"
#include "pomnar/po_fitter.hpp"

namespace pomnar::report {

enum class Method { EM, CC };
/// Odds-ratio transform of an outcome slope: exp(-b) or exp(+b).
enum class OrDirection { Negative, Positive };

struct FitRequest {
  Method method = Method::EM;
  double ci_level = 0.95;
  OrDirection or_direction = OrDirection::Negative;
  bool allow_boundary = false;
  double outer_tol = 1e-6;
  int max_outer = 500;
};

struct FitOutcome {
  nlohmann::ordered_json json;
  bool ok = false;  // usable estimates (converged, or an accepted boundary solution)
};

namespace detail {

// Values are rounded to 8 significant digits once so the JSON and text
// renderings print the same numbers.
inline nlohmann::ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return std::strtod(buf, nullptr);
}

inline nlohmann::ordered_json coef_table(const std::vector<std::string>& names, const VectorXd& est,
                                         const VectorXd& se, const VectorXd& lo, const VectorXd& hi,
                                         const std::vector<int>& or_sign) {
  const VectorXd p = wald_p_values(est, se);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Index k = 0; k < est.size(); ++k) {
    nlohmann::ordered_json r;
    r["term"] = names[static_cast<std::size_t>(k)];
    r["estimate"] = num(est(k));
    r["se"] = num(se(k));
    r["ci_lower"] = num(lo(k));
    r["ci_upper"] = num(hi(k));
    r["p_value"] = num(p(k));
    const int s = or_sign[static_cast<std::size_t>(k)];
    if (s == 0) {
      r["odds_ratio"] = nullptr;
      r["or_ci_lower"] = nullptr;
      r["or_ci_upper"] = nullptr;
    } else {
      r["odds_ratio"] = num(std::exp(s * est(k)));
      r["or_ci_lower"] = num(std::exp(s > 0 ? lo(k) : -hi(k)));
      r["or_ci_upper"] = num(std::exp(s > 0 ? hi(k) : -lo(k)));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<std::string> outcome_names(const std::vector<std::string>& levels,
                                              const std::vector<std::string>& covariates) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) names.push_back("cut>" + levels[j]);
  names.insert(names.end(), covariates.begin(), covariates.end());
  return names;
}

}  // namespace detail

/// Fits the dataset and builds the report. Estimation failures are reported
/// in the JSON ("error" with the failing submodel) and leave `ok` false.
inline FitOutcome fit_dataset(const CsvDataset& input, const CsvDatasetSpec& spec, const FitRequest& req) {
  const OrdinalDataset& ds = input.data;
  const int J = ds.num_categories();
  const Index p = ds.num_outcome_covariates();
  const std::vector<std::string>& wnames = spec.missingness_covariates.empty() ? spec.covariates
                                                                              : spec.missingness_covariates;
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["method"] = req.method == Method::EM ? "em" : "cc";
  j["link"] = "logit P(Y > level_j) = cut_j + x'beta";
  j["or_direction"] = req.or_direction == OrDirection::Negative ? "exp(-beta)" : "exp(beta)";
  j["ci_level"] = req.ci_level;
  j["summary"] = {{"n", ds.size()},
                  {"categories", J},
                  {"levels", input.levels},
                  {"covariates", spec.covariates},
                  {"missingness_covariates", wnames},
                  {"missing", ds.num_missing()},
                  {"missing_fraction", detail::num(static_cast<double>(ds.num_missing()) / ds.size())}};

  const auto names = detail::outcome_names(input.levels, spec.covariates);
  std::vector<int> or_sign(static_cast<std::size_t>(J - 1), 0);
  or_sign.resize(static_cast<std::size_t>(J - 1 + p), req.or_direction == OrDirection::Negative ? -1 : 1);

  FitOutcome out;
  try {
    if (req.method == Method::CC) {
      const OrdinalDataset cc = ds.complete_cases();
      if (!cc.all_categories_observed())
        throw FitError(FitErrorKind::Degenerate, "outcome", "every category must be observed at least once");
      const PoFitResult fit = fit_po_weighted(augment_dataset(cc));
      const VectorXd est = fit.params.packed();
      const WaldInference w = se_and_ci(fit.neg_hessian, est, req.ci_level);
      j["outcome_model"] = detail::coef_table(names, est, w.se, w.ci_lower, w.ci_upper, or_sign);
      j["diagnostics"] = {{"converged", fit.converged},
                          {"iterations", fit.iterations},
                          {"loglik", detail::num(fit.loglik)},
                          {"n_used", cc.size()}};
      out.ok = fit.converged;
    } else {
      EmOptions opts;
      opts.ci_level = req.ci_level;
      opts.boundary_fallback = req.allow_boundary;
      opts.outer_tol = req.outer_tol;
      opts.max_outer = req.max_outer;
      const EmFit fit = em_fit(ds, opts);
      const Index m1 = fit.num_outcome_params();
      const VectorXd est = fit.gamma.packed();
      j["outcome_model"] = detail::coef_table(names, est.head(m1), fit.se.head(m1), fit.ci_lower.head(m1),
                                              fit.ci_upper.head(m1), or_sign);
      std::vector<std::string> mnames{"intercept"};
      mnames.insert(mnames.end(), wnames.begin(), wnames.end());
      mnames.push_back("Y");
      const Index m2 = est.size() - m1;
      j["missingness_model"] =
          detail::coef_table(mnames, est.tail(m2), fit.se.tail(m2), fit.ci_lower.tail(m2), fit.ci_upper.tail(m2),
                             std::vector<int>(static_cast<std::size_t>(m2), 1));
      nlohmann::ordered_json trace = nlohmann::ordered_json::array();
      for (double v : fit.loglik_trace) trace.push_back(detail::num(v));
      j["diagnostics"] = {{"converged", fit.converged},
                          {"iterations", fit.iterations},
                          {"restarts", fit.restarts},
                          {"boundary", to_string(fit.boundary)},
                          {"missingness_degenerate", fit.missingness_degenerate},
                          {"max_ascent_violation", detail::num(fit.max_ascent_violation)},
                          {"max_weight_sum_error", detail::num(fit.max_weight_sum_error)},
                          {"covariance_error", fit.covariance_error ? nlohmann::ordered_json(*fit.covariance_error)
                                                                    : nlohmann::ordered_json(nullptr)},
                          {"loglik", detail::num(fit.loglik_trace.back())},
                          {"loglik_trace", trace}};
      if (fit.boundary != BoundarySide::None) {
        nlohmann::ordered_json ba = nlohmann::ordered_json::array();
        for (Index k = 0; k < fit.boundary_alpha.size(); ++k) ba.push_back(detail::num(fit.boundary_alpha(k)));
        j["diagnostics"]["boundary_missingness_coefficients"] = ba;
      }
      out.ok = fit.converged || fit.boundary != BoundarySide::None;
    }
  } catch (const FitError& e) {
    j["error"] = {{"kind", to_string(e.kind())}, {"submodel", e.submodel()}, {"message", e.what()}};
  }
  out.json = std::move(j);
  return out;
}

namespace detail {

inline std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "NA";
  if (!v.is_number_float()) return v.dump();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v.get<double>());
  return buf;
}

inline void render_table(std::ostream& os, const std::string& title, const nlohmann::ordered_json& rows) {
  os << title << '\n';
  const char* cols[] = {"term", "estimate", "se", "ci_lower", "ci_upper", "p_value", "odds_ratio", "or_ci_lower",
                        "or_ci_upper"};
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back(std::begin(cols), std::end(cols));
  for (const auto& r : rows) {
    std::vector<std::string> line{r["term"].get<std::string>()};
    for (std::size_t c = 1; c < std::size(cols); ++c) line.push_back(cell(r[cols[c]]));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(std::size(cols), 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : grid) {
    os << "  " << std::left << std::setw(static_cast<int>(width[0])) << line[0];
    for (std::size_t c = 1; c < line.size(); ++c) os << "  " << std::right << std::setw(static_cast<int>(width[c])) << line[c];
    os << '\n';
  }
}

}  // namespace detail

/// Human-readable rendering of a fit report.
inline std::string render_text(const nlohmann::ordered_json& j) {
  std::ostringstream os;
  const auto& s = j["summary"];
  os << "method " << j["method"].get<std::string>() << ", " << s["categories"].dump() << " categories, n = "
     << s["n"].dump() << ", missing = " << s["missing"].dump() << " (" << detail::cell(s["missing_fraction"])
     << ")\n";
  os << "link: " << j["link"].get<std::string>() << "; odds ratios " << j["or_direction"].get<std::string>()
     << "; CI level " << j["ci_level"].dump() << "\n";
  if (j.contains("error")) {
    os << "fit failed in submodel " << j["error"]["submodel"].get<std::string>() << ": "
       << j["error"]["message"].get<std::string>() << '\n';
    return os.str();
  }
  detail::render_table(os, "outcome model", j["outcome_model"]);
  if (j.contains("missingness_model")) detail::render_table(os, "missingness model", j["missingness_model"]);
  const auto& d = j["diagnostics"];
  os << "converged " << d["converged"].dump() << ", iterations " << d["iterations"].dump() << ", loglik "
     << detail::cell(d["loglik"]);
  if (d.contains("boundary")) os << ", boundary " << d["boundary"].get<std::string>();
  os << '\n';
  if (d.contains("covariance_error") && !d["covariance_error"].is_null())
    os << "covariance: " << d["covariance_error"].get<std::string>() << '\n';
  return os.str();
}

}  // namespace pomnar::report
