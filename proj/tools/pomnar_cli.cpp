// pomnar: fit ordinal data with MNAR missing responses and run the simulation
// scenarios.
//
// Exit codes: 0 success, 1 estimation failure, 2 usage / input / config error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "pomnar/csv.hpp"
#include "pomnar/example_data.hpp"
#include "pomnar/fit_report.hpp"
#include "pomnar/replicate.hpp"
#include "pomnar/scenario_io.hpp"
#include "pomnar/sim_lab.hpp"

namespace fs = std::filesystem;
using namespace pomnar;

namespace {

constexpr int kExitFitFailed = 1;
constexpr int kExitUsage = 2;

int default_workers() {
  if (const char* env = std::getenv("POMNAR_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid POMNAR_WORKERS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

struct FitArgs {
  std::string input, response, id, out;
  std::vector<std::string> covariates, miss_covariates, levels;
  std::string method = "em", or_direction = "neg";
  double ci_level = 0.95;
  bool allow_boundary = false;
};

int run_fit(const FitArgs& a) {
  CsvDatasetSpec spec{a.response, a.covariates, a.miss_covariates, a.levels, a.id};
  const CsvDataset data = dataset_from_csv(read_csv_file(a.input), spec);
  report::FitRequest req;
  req.method = a.method == "cc" ? report::Method::CC : report::Method::EM;
  req.ci_level = a.ci_level;
  req.or_direction = a.or_direction == "pos" ? report::OrDirection::Positive : report::OrDirection::Negative;
  req.allow_boundary = a.allow_boundary;
  const report::FitOutcome fit = report::fit_dataset(data, spec, req);
  std::cout << report::render_text(fit.json);
  if (!a.out.empty()) write_file(a.out, fit.json.dump(2) + "\n");
  return fit.ok ? 0 : kExitFitFailed;
}

struct SimArgs {
  std::string config, out;
  int workers = 1;
  std::optional<std::uint64_t> seed;
};

void print_metrics(const sim::MetricsTable& t) {
  std::cout << t.scenario << "  n = " << t.n << "  replications = " << t.replications
            << "  mean missing fraction = " << sim::format_number(t.mean_missing_fraction, 4) << '\n';
  std::cout << "param   est     truth     mean       abs_bias   mse        cp95    used  bnd  fail\n";
  for (const auto& r : t.rows) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-7s %-6s %8.4f  %9.4f  %9.4f  %9.4f  %6.3f  %5d %4d %5d\n", r.parameter.c_str(),
                  sim::to_string(r.estimator).c_str(), r.truth, r.mean_estimate, r.abs_bias, r.mse, r.cp, r.converged,
                  r.boundary, r.failed);
    std::cout << buf;
  }
}

// Runs one scenario and writes metrics.csv, rel_bias.csv and manifest.json.
sim::MetricsTable run_and_write(const sim::ScenarioConfig& cfg, int workers, const fs::path& dir) {
  const auto records = sim::run_scenario(cfg, workers, [](int done, int total) {
    if (done == total || done % 50 == 0) std::cerr << "\r  " << done << "/" << total << std::flush;
    if (done == total) std::cerr << '\n';
  });
  const sim::MetricsTable table = sim::summarize(records, cfg);
  std::ostringstream metrics, rel;
  sim::write_metrics_csv(metrics, table);
  sim::write_rel_bias_csv(rel, table);
  write_file(dir / "metrics.csv", metrics.str());
  write_file(dir / "rel_bias.csv", rel.str());
  const auto manifest = sim::make_manifest(cfg, records, table, {"metrics.csv", "rel_bias.csv", "manifest.json"});
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return table;
}

int run_simulate(const SimArgs& a) {
  sim::ScenarioConfig cfg = sim::load_config(a.config);
  if (a.seed) cfg.base_seed = *a.seed;
  const auto table = run_and_write(cfg, a.workers, a.out);
  print_metrics(table);
  return 0;
}

struct ReplicateArgs {
  std::string table, out;
  std::vector<int> sizes;
  int reps = 1000;
  int workers = 1;
  std::optional<std::uint64_t> seed;
};

int run_replicate(const ReplicateArgs& a) {
  const std::vector<int> allowed = sim::published_sizes(a.table);
  const std::vector<int> sizes = a.sizes.empty() ? allowed : a.sizes;
  for (int n : sizes)
    if (std::find(allowed.begin(), allowed.end(), n) == allowed.end())
      throw sim::ConfigError("table " + a.table + " has no published results for n = " + std::to_string(n));
  std::vector<sim::ComparisonRow> all;
  for (int n : sizes) {
    sim::ScenarioConfig cfg = sim::table_preset(a.table, n);
    cfg.replications = a.reps;
    if (a.seed) cfg.base_seed = *a.seed;
    std::cerr << a.table << " n = " << n << '\n';
    sim::MetricsTable table;
    if (a.out.empty()) {
      table = sim::summarize(sim::run_scenario(cfg, a.workers), cfg);
    } else {
      table = run_and_write(cfg, a.workers, fs::path(a.out) / (a.table + "_n" + std::to_string(n)));
    }
    auto rows = sim::compare_with_published(a.table, table);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  const std::string text = sim::render_comparison(a.table, all);
  std::cout << text;
  if (!a.out.empty()) {
    std::ostringstream csv;
    sim::write_comparison_csv(csv, a.table, all);
    write_file(fs::path(a.out) / "comparison.csv", csv.str());
    write_file(fs::path(a.out) / "comparison.txt", text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pomnar: proportional-odds regression with nonignorable missing ordinal responses"};
  app.require_subcommand(1);
  const int workers_default = default_workers();

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "Fit a CSV dataset by EM (MNAR selection model) or complete cases");
  fit->add_option("--input", fa.input, "CSV file with a header row")->required()->check(CLI::ExistingFile);
  fit->add_option("--response", fa.response, "Ordinal response column; empty or NA means missing")->required();
  fit->add_option("--covariates", fa.covariates, "Outcome-model covariate columns")->required()->delimiter(',');
  fit->add_option("--miss-covariates", fa.miss_covariates,
                  "Missingness-model covariate columns (default: the outcome covariates)")
      ->delimiter(',');
  fit->add_option("--levels", fa.levels,
                  "Response levels from lowest to highest (default: numeric order, else lexicographic)")
      ->delimiter(',');
  fit->add_option("--id", fa.id, "Subject id column");
  fit->add_option("--method", fa.method, "em or cc")->check(CLI::IsMember({"em", "cc"}))->capture_default_str();
  fit->add_option("--ci-level", fa.ci_level, "Confidence level")
      ->check(CLI::Range(0.0, 1.0).description("in [0, 1)"))
      ->capture_default_str();
  fit->add_option("--or-direction", fa.or_direction,
                  "Outcome odds ratios as exp(-beta) (neg) or exp(beta) (pos)")
      ->check(CLI::IsMember({"neg", "pos"}))
      ->capture_default_str();
  fit->add_flag("--allow-boundary", fa.allow_boundary,
                "Accept a boundary solution when the response slope of the missingness model diverges");
  fit->add_option("--out", fa.out, "Write the JSON report here");

  SimArgs sa;
  sa.workers = workers_default;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario config and write metrics, plot data and a manifest");
  simulate->add_option("--config", sa.config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", sa.out, "Output directory")->required();
  simulate->add_option("--workers", sa.workers, "Worker threads (default: $POMNAR_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sa.seed, "Override the config's base seed");

  ReplicateArgs ra;
  ra.workers = workers_default;
  auto* replicate = app.add_subcommand("replicate", "Rerun a published simulation table and compare");
  replicate->add_option("--table", ra.table, "Preset table")
      ->required()
      ->check(CLI::IsMember(sim::preset_names()));
  replicate->add_option("--sizes", ra.sizes, "Sample sizes (default: every published size)")->delimiter(',');
  replicate->add_option("--reps", ra.reps, "Replications per size")->check(CLI::PositiveNumber)->capture_default_str();
  replicate->add_option("--workers", ra.workers, "Worker threads (default: $POMNAR_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  replicate->add_option("--out", ra.out, "Output directory for per-size metrics and the comparison");
  replicate->add_option("--seed", ra.seed, "Override the preset base seed");

  std::string ex_out;
  std::uint64_t ex_seed = 2013;
  auto* example = app.add_subcommand("example-data", "Write the synthetic five-category trial dataset");
  example->add_option("--out", ex_out, "CSV path")->required();
  example->add_option("--seed", ex_seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fit) return run_fit(fa);
    if (*simulate) return run_simulate(sa);
    if (*replicate) return run_replicate(ra);
    if (*example) {
      std::ostringstream os;
      example::write_trial_csv(os, example::generate_trial(ex_seed));
      write_file(ex_out, os.str());
      return 0;
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sim::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFitFailed;
  }
  return kExitUsage;
}
