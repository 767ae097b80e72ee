#pragma once

// Synthetic five-category trial dataset with MNAR missing responses and known
// generating parameters.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "pomnar/po_fitter.hpp"
#include "pomnar/sim_lab.hpp"

namespace pomnar::example {

/// Columns: id, pga (0..4, empty when missing), dose5, dose10, age, male,
/// weight, onset (years since diagnosis), pasi (baseline severity score).
struct TrialTruth {
  // logit P(PGA > j) = theta_j + x'beta, x = (dose5, dose10, age, male, weight, onset, pasi)
  VectorXd theta = (VectorXd(4) << 0.6, -0.8, -3.0, -5.0).finished();
  VectorXd beta = (VectorXd(7) << -1.3, -1.9, -0.006, -0.2, 0.008, -0.01, 0.12).finished();
  // logit P(missing) = alpha_0 + w'alpha_w + alpha_y * category, w = x, category = PGA + 1
  VectorXd alpha = (VectorXd(9) << -6.3, -0.5, -0.8, -0.01, 0.0, 0.0, 0.0, 0.0, 1.6).finished();
  int n = 960;
};

inline const std::vector<std::string>& trial_covariates() {
  static const std::vector<std::string> names{"dose5", "dose10", "age", "male", "weight", "onset", "pasi"};
  return names;
}

struct TrialRow {
  int pga = 0;  // 0..4
  bool missing = false;
  double dose5 = 0, dose10 = 0, age = 0, male = 0, weight = 0, onset = 0, pasi = 0;
};

inline std::vector<TrialRow> generate_trial(std::uint64_t seed, const TrialTruth& truth = {}) {
  std::mt19937_64 rng(sim::splitmix64(seed));
  std::normal_distribution<double> age(45.0, 13.0), weight(88.0, 22.0);
  std::gamma_distribution<double> onset(2.0, 8.0), pasi(2.0, 5.0);
  std::bernoulli_distribution male(0.68);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const PoParams po{truth.theta, truth.beta};
  std::vector<TrialRow> rows(static_cast<std::size_t>(truth.n));
  for (int i = 0; i < truth.n; ++i) {
    TrialRow& r = rows[static_cast<std::size_t>(i)];
    const int arm = i % 5;  // placebo : 5 mg : 10 mg = 1 : 2 : 2
    r.dose5 = arm == 1 || arm == 2 ? 1.0 : 0.0;
    r.dose10 = arm >= 3 ? 1.0 : 0.0;
    r.age = std::clamp(age(rng), 18.0, 85.0);
    r.male = male(rng) ? 1.0 : 0.0;
    r.weight = std::clamp(weight(rng), 40.0, 180.0);
    r.onset = std::min(onset(rng), r.age - 5.0);
    r.pasi = std::min(12.0 + pasi(rng), 72.0);
    VectorXd x(7);
    x << r.dose5, r.dose10, r.age, r.male, r.weight, r.onset, r.pasi;
    const VectorXd pi = category_probs(po, x);
    double u = unif(rng), acc = 0.0;
    int k = 5;
    for (int j = 0; j < 4; ++j)
      if (u < (acc += pi(j))) {
        k = j + 1;
        break;
      }
    r.pga = k - 1;
    const double eta = truth.alpha(0) + truth.alpha.segment(1, 7).dot(x) + truth.alpha(8) * k;
    r.missing = unif(rng) < 1.0 / (1.0 + std::exp(-eta));
  }
  return rows;
}

inline void write_trial_csv(std::ostream& os, const std::vector<TrialRow>& rows) {
  os << "id,pga,dose5,dose10,age,male,weight,onset,pasi\n";
  char buf[160];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const std::string pga = r.missing ? "" : std::to_string(r.pga);
    std::snprintf(buf, sizeof buf, "S%04zu,%s,%.0f,%.0f,%.1f,%.0f,%.1f,%.1f,%.1f\n", i + 1, pga.c_str(), r.dose5,
                  r.dose10, r.age, r.male, r.weight, r.onset, r.pasi);
    os << buf;
  }
}

}  // namespace pomnar::example
