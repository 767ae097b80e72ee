#pragma once

// Side-by-side comparison of simulated metrics with the published tables.

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pomnar/published_tables.hpp"
#include "pomnar/scenario_io.hpp"
#include "pomnar/sim_lab.hpp"

namespace pomnar::sim {

/// Sample sizes the published table reports for a preset.
inline std::vector<int> published_sizes(const std::string& table) {
  if (table == "alt") return {250};
  if (table == "t2" || table == "t3" || table == "t4" || table == "supp5") return {60, 150, 250, 500, 1000};
  throw std::invalid_argument("unknown table '" + table + "' (expected t2, t3, t4, supp5 or alt)");
}

struct ComparisonCell {
  std::string metric;  // mean, abs_bias, mse, cp, sd, mean_se
  double ours = 0.0;
  double published = 0.0;
  double tolerance = 0.0;
  bool within = true;  // also true when either side is missing
};

struct ComparisonRow {
  int n = 0;
  std::string parameter;
  Estimator estimator = Estimator::EM;
  std::vector<ComparisonCell> cells;
};

/// Tolerances: both tables carry Monte Carlo error, so location metrics allow
/// 3 sqrt(2) sd / sqrt(reps) + 0.01, coverage 3 sqrt(2 * 0.95 * 0.05 / reps) +
/// 0.005, MSE 25% (at least 0.002) and SD / mean SE 15%.
inline std::vector<ComparisonRow> compare_with_published(const std::string& table, const MetricsTable& m) {
  std::vector<ComparisonRow> out;
  for (const auto& r : m.rows) {
    const PublishedCell* pub = find_published(table, m.n, r.parameter, to_string(r.estimator));
    if (!pub) continue;
    ComparisonRow row{m.n, r.parameter, r.estimator, {}};
    const double reps = std::max(1, r.converged);
    const double loc_tol = 3.0 * std::sqrt(2.0) * r.sd / std::sqrt(reps) + 0.01;
    auto add = [&](const char* metric, double ours, double published, double tol) {
      ComparisonCell c{metric, ours, published, tol, true};
      if (std::isfinite(ours) && std::isfinite(published)) c.within = std::abs(ours - published) <= tol;
      row.cells.push_back(c);
    };
    add("mean", r.mean_estimate, pub->mean, loc_tol);
    add("abs_bias", r.abs_bias, pub->abs_bias, loc_tol);
    add("mse", r.mse, pub->mse, std::max(0.25 * std::abs(pub->mse), 0.002));
    add("cp", r.cp, pub->cp, 3.0 * std::sqrt(2.0 * 0.95 * 0.05 / reps) + 0.005);
    if (std::isfinite(pub->sd)) {
      add("sd", r.sd, pub->sd, 0.15 * pub->sd);
      add("mean_se", r.mean_se, pub->mean_se, 0.15 * pub->mean_se);
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline void write_comparison_csv(std::ostream& os, const std::string& table, const std::vector<ComparisonRow>& rows) {
  os << "table,n,parameter,estimator,metric,ours,published,tolerance,within\n";
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      os << table << ',' << r.n << ',' << r.parameter << ',' << to_string(r.estimator) << ',' << c.metric << ','
         << format_number(c.ours) << ',' << format_number(c.published) << ',' << format_number(c.tolerance) << ','
         << (c.within ? "true" : "false") << '\n';
}

/// Text table: one line per parameter x estimator with "ours / published"
/// pairs; a trailing '*' marks a cell outside tolerance.
inline std::string render_comparison(const std::string& table, const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  int flagged = 0, total = 0;
  int current_n = -1;
  auto pair = [](const ComparisonCell& c) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(c.metric == "mse" || c.metric == "sd" || c.metric == "mean_se" ? 4 : 3);
    if (std::isfinite(c.ours)) s << c.ours; else s << "NA";
    s << " / ";
    if (std::isfinite(c.published)) s << c.published; else s << "NA";
    s << (c.within ? " " : "*");
    return s.str();
  };
  for (const auto& r : rows) {
    if (r.n != current_n) {
      current_n = r.n;
      os << "\n" << table << "  n = " << r.n << "   (ours / published, * = outside tolerance)\n";
      os << std::left << std::setw(8) << "param" << std::setw(7) << "est";
      for (const auto& c : r.cells) os << std::setw(20) << c.metric;
      os << '\n';
    }
    os << std::left << std::setw(8) << r.parameter << std::setw(7) << to_string(r.estimator);
    for (const auto& c : r.cells) {
      os << std::setw(20) << pair(c);
      if (std::isfinite(c.ours) && std::isfinite(c.published)) {
        ++total;
        if (!c.within) ++flagged;
      }
    }
    os << '\n';
  }
  os << "\n" << flagged << " of " << total << " compared cells outside tolerance\n";
  return os.str();
}

}  // namespace pomnar::sim
