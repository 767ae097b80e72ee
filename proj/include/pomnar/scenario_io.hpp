#pragma once

// JSON scenario configs, metrics / relative-bias CSV writers and run manifests.

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pomnar/sim_lab.hpp"

namespace pomnar::sim {

inline constexpr int kSchemaVersion = 1;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<double> to_std(const VectorXd& v) { return {v.data(), v.data() + v.size()}; }

inline VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<Index>(v.size()));
}

}  // namespace detail

inline nlohmann::ordered_json config_to_json(const ScenarioConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = cfg.name;
  j["n"] = cfg.n;
  j["num_categories"] = cfg.num_categories;
  j["theta"] = detail::to_std(cfg.truth.theta);
  j["beta"] = detail::to_std(cfg.truth.beta);
  j["alpha"] = detail::to_std(cfg.alpha_true.alpha);
  j["replications"] = cfg.replications;
  j["base_seed"] = cfg.base_seed;
  std::vector<std::string> est;
  for (auto e : cfg.estimators) est.push_back(to_string(e));
  j["estimators"] = est;
  j["allocation"] = cfg.allocation == Allocation::Fixed ? "fixed" : "bernoulli";
  j["treated_fraction"] = cfg.treated_fraction;
  j["ci_level"] = cfg.ci_level;
  j["em_boundary"] = cfg.em_boundary;
  return j;
}

/// Reads a config object. A "preset" key (t2, t3, t4, supp5, alt) supplies
/// defaults that the remaining keys override; unknown keys are rejected.
inline ScenarioConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"schema_version", "name",     "preset",      "n",
                                           "num_categories", "theta",    "beta",        "alpha",
                                           "replications",   "base_seed", "estimators", "allocation",
                                           "treated_fraction", "ci_level", "em_boundary"};
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ConfigError("config: unknown key '" + key + "'");
  if (!j.contains("schema_version")) throw ConfigError("config: missing schema_version");
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ConfigError("config: unsupported schema_version " + j.at("schema_version").dump() + " (expected " +
                        std::to_string(kSchemaVersion) + ")");
    ScenarioConfig cfg;
    const int n = j.value("n", cfg.n);
    if (j.contains("preset")) {
      cfg = table_preset(j.at("preset").get<std::string>(), n);
    } else {
      for (const char* key : {"theta", "beta", "alpha"})
        if (!j.contains(key)) throw ConfigError(std::string("config: missing '") + key + "' (or give a preset)");
    }
    cfg.n = n;
    cfg.name = j.value("name", cfg.name);
    if (j.contains("theta")) cfg.truth.theta = detail::to_eigen(j.at("theta").get<std::vector<double>>());
    if (j.contains("beta")) cfg.truth.beta = detail::to_eigen(j.at("beta").get<std::vector<double>>());
    if (j.contains("alpha")) cfg.alpha_true.alpha = detail::to_eigen(j.at("alpha").get<std::vector<double>>());
    cfg.num_categories = j.value("num_categories", static_cast<int>(cfg.truth.theta.size()) + 1);
    cfg.replications = j.value("replications", cfg.replications);
    cfg.base_seed = j.value("base_seed", cfg.base_seed);
    if (j.contains("estimators")) {
      cfg.estimators.clear();
      for (const auto& s : j.at("estimators").get<std::vector<std::string>>()) {
        const Estimator e = estimator_from_string(s);
        if (cfg.wants(e)) throw ConfigError("config: estimator '" + s + "' listed twice");
        cfg.estimators.push_back(e);
      }
    }
    if (j.contains("allocation")) {
      const auto a = j.at("allocation").get<std::string>();
      if (a == "fixed") cfg.allocation = Allocation::Fixed;
      else if (a == "bernoulli") cfg.allocation = Allocation::Bernoulli;
      else throw ConfigError("config: allocation must be 'fixed' or 'bernoulli'");
    }
    cfg.treated_fraction = j.value("treated_fraction", cfg.treated_fraction);
    cfg.ci_level = j.value("ci_level", cfg.ci_level);
    cfg.em_boundary = j.value("em_boundary", cfg.em_boundary);
    cfg.validate();
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Hash of the canonical (key-ordered, compact) config dump.
inline std::string config_hash(const ScenarioConfig& cfg) { return hex64(fnv1a64(config_to_json(cfg).dump())); }

// ---------------------------------------------------------------- CSV

/// %g formatting with `digits` significant digits; NaN becomes NA.
inline std::string format_number(double v, int digits = 10) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v == 0.0 ? 0.0 : v);
  return buf;
}

inline void write_metrics_csv(std::ostream& os, const MetricsTable& t) {
  os << "scenario,n,parameter,estimator,truth,mean_estimate,abs_bias,sd,mean_se,mse,cp95,cp_count,"
        "rel_bias,used,boundary,failed\n";
  for (const auto& r : t.rows) {
    os << t.scenario << ',' << t.n << ',' << r.parameter << ',' << to_string(r.estimator) << ','
       << format_number(r.truth) << ',' << format_number(r.mean_estimate) << ',' << format_number(r.abs_bias) << ','
       << format_number(r.sd) << ',' << format_number(r.mean_se) << ',' << format_number(r.mse) << ','
       << format_number(r.cp) << ',' << r.cp_count << ','
       << (r.rel_bias_defined ? format_number(r.rel_bias) : std::string("NA")) << ',' << r.converged << ','
       << r.boundary << ',' << r.failed << '\n';
  }
}

/// Long format for relative-bias plots: one row per parameter x estimator.
inline void write_rel_bias_csv(std::ostream& os, const MetricsTable& t) {
  os << "scenario,n,parameter,estimator,truth,mean_estimate,rel_bias,defined\n";
  for (const auto& r : t.rows) {
    os << t.scenario << ',' << t.n << ',' << r.parameter << ',' << to_string(r.estimator) << ','
       << format_number(r.truth) << ',' << format_number(r.mean_estimate) << ','
       << (r.rel_bias_defined ? format_number(r.rel_bias) : std::string("NA")) << ','
       << (r.rel_bias_defined ? "true" : "false") << '\n';
  }
}

// ---------------------------------------------------------------- manifest

inline nlohmann::ordered_json metrics_to_json(const MetricsTable& t) {
  auto num = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"parameter", r.parameter},
                    {"estimator", to_string(r.estimator)},
                    {"truth", r.truth},
                    {"mean_estimate", num(r.mean_estimate)},
                    {"abs_bias", num(r.abs_bias)},
                    {"sd", num(r.sd)},
                    {"mean_se", num(r.mean_se)},
                    {"mse", num(r.mse)},
                    {"cp95", num(r.cp)},
                    {"rel_bias", r.rel_bias_defined ? num(r.rel_bias) : nullptr},
                    {"converged", r.converged},
                    {"boundary", r.boundary},
                    {"failed", r.failed}});
  }
  return {{"scenario", t.scenario},
          {"n", t.n},
          {"replications", t.replications},
          {"mean_missing_fraction", t.mean_missing_fraction},
          {"rows", rows}};
}

/// Run manifest: config, its hash, seeds, convergence counts and failure reasons.
inline nlohmann::ordered_json make_manifest(const ScenarioConfig& cfg, const std::vector<ReplicationRecord>& records,
                                            const MetricsTable& table, const std::vector<std::string>& outputs) {
  nlohmann::ordered_json m;
  m["schema_version"] = kSchemaVersion;
  m["tool"] = "pomnar simulate";
  m["config"] = config_to_json(cfg);
  m["config_hash"] = "fnv1a64:" + config_hash(cfg);
  m["base_seed"] = cfg.base_seed;
  m["seed_rule"] = "replicate t uses splitmix64(splitmix64(base_seed) ^ splitmix64(t + 0x632be59bd9b4e019))";
  std::vector<std::string> seeds;
  seeds.reserve(records.size());
  for (const auto& r : records) seeds.push_back(hex64(r.seed));
  m["replicate_seeds"] = seeds;
  m["mean_missing_fraction"] = table.mean_missing_fraction;
  nlohmann::ordered_json conv = nlohmann::ordered_json::object();
  for (auto e : cfg.estimators) {
    int ok = 0, boundary = 0, failed = 0;
    std::map<std::string, int> reasons;
    for (const auto& r : records) {
      const auto& res = r.result(e);
      if (res && res->converged) {
        ++ok;
        if (res->boundary) ++boundary;
      } else {
        ++failed;
        ++reasons[res ? res->error : "not run"];
      }
    }
    conv[to_string(e)] = {{"used", ok}, {"boundary", boundary}, {"failed", failed}, {"failure_reasons", reasons}};
  }
  m["convergence"] = conv;
  m["outputs"] = outputs;
  return m;
}

}  // namespace pomnar::sim
