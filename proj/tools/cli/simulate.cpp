#include <chrono>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cyclebuy/experiments.hpp"

namespace cyclebuy::cli {

namespace {

struct SimulateOptions {
  std::string model = "rom";
  std::string strategy;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> n_grid;
  std::optional<std::uint32_t> k;
  double threshold = 0.5;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out;
  std::string manifest;
};

nlohmann::json row_summary(const ExperimentRow& row) {
  const StatsSummary& s = row.stats;
  nlohmann::json j;
  j["n"] = row.n;
  j["k"] = row.k ? nlohmann::json(*row.k) : nlohmann::json(nullptr);
  j["trials"] = s.trials;
  j["mean_cost"] = s.mean;
  j["std_cost"] = s.std;
  j["standard_error"] = s.standard_error();
  j["success_rate"] = s.success_rate;
  j["fallback_rate"] = s.fallback_rate;
  j["nonfallback_trials"] = s.nonfallback_trials;
  j["nonfallback_mean_cost"] = s.nonfallback_mean;
  j["nonfallback_std_cost"] = s.nonfallback_std;
  j["nonfallback_standard_error"] = s.nonfallback_standard_error();

  // END statistics, over the runs where END was formed (no fallback).
  if (row.k && s.mean_end_size) {
    std::uint64_t formed = 0;
    std::uint64_t large = 0;
    double ratio_total = 0.0;
    for (const TrialRecord& r : row.records) {
      if (!r.end_size) continue;
      ++formed;
      if (*r.end_size * 10 >= *row.k) ++large;
      ratio_total += static_cast<double>(*r.end_size) / *row.k;
    }
    j["end_formed_trials"] = formed;
    j["end_at_least_tenth_k_rate"] = static_cast<double>(large) / static_cast<double>(formed);
    j["end_at_least_tenth_k_rate_all_trials"] =
        static_cast<double>(large) / static_cast<double>(s.trials);
    j["mean_end_over_k"] = ratio_total / static_cast<double>(formed);
  }
  return j;
}

void execute(Context& ctx, const SimulateOptions& o, bool sweep) {
  ExperimentConfig config;
  config.model = parse_model(o.model);
  config.strategy_id = o.strategy;
  config.k = o.k;
  config.threshold = o.threshold;
  config.n_grid = sweep ? o.n_grid : std::vector<std::uint32_t>{o.n};
  config.trials = o.trials;
  config.seed = SeedSpec(o.seed);
  config.workers = o.workers;
  config.validate();

  const auto start = std::chrono::steady_clock::now();
  const std::vector<ExperimentRow> rows = run_experiment(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream csv;
  write_csv_header(csv);
  nlohmann::json summary = nlohmann::json::array();
  for (const ExperimentRow& row : rows) {
    write_csv_row(csv, config, row);
    summary.push_back(row_summary(row));
  }

  nlohmann::json echo;
  echo["model"] = o.model;
  echo["strategy"] = o.strategy;
  if (sweep) {
    echo["n-grid"] = o.n_grid;
  } else {
    echo["n"] = o.n;
  }
  if (o.k) echo["k"] = *o.k;
  echo["threshold"] = o.threshold;
  echo["trials"] = o.trials;
  echo["seed"] = o.seed;
  echo["workers"] = o.workers;

  emit(ctx, sweep ? "sweep" : "simulate", o.out, o.manifest, csv.str(), echo, summary, o.seed,
       seconds);
  ctx.exit_code = kOk;
}

CLI::App* add_common(CLI::App& root, const std::string& name, const std::string& help,
                     SimulateOptions& o) {
  CLI::App* sub = root.add_subcommand(name, help);
  sub->add_option("--model", o.model, "Reveal model")
      ->check(CLI::IsMember({"rom", "pom"}))
      ->capture_default_str();
  std::vector<std::string> ids;
  for (std::string_view id : strategy_ids()) ids.emplace_back(id);
  sub->add_option("--strategy", o.strategy, "Strategy id")->required()->check(CLI::IsMember(ids));
  sub->add_option("--k", o.k, "Number of paths (tree-p3)")->check(CLI::PositiveNumber);
  sub->add_option("--threshold", o.threshold, "Acceptance threshold (naive-threshold)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--trials", o.trials, "Trials per n")->required()->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Master seed")->required();
  sub->add_option("--workers", o.workers, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  sub->add_option("--out", o.out, "CSV output path (stdout if omitted)");
  sub->add_option("--manifest", o.manifest, "Manifest path (default <out>.manifest.json)");
  return sub;
}

}  // namespace

void register_simulate(CLI::App& root, Context& ctx) {
  auto sim = std::make_shared<SimulateOptions>();
  CLI::App* simulate = add_common(root, "simulate", "Run trials at a single n", *sim);
  simulate->add_option("--n", sim->n, "Number of vertices")->required()->check(CLI::Range(4u, 1u << 20));
  simulate->callback([&ctx, sim] { execute(ctx, *sim, false); });

  auto swp = std::make_shared<SimulateOptions>();
  CLI::App* sweep = add_common(root, "sweep", "Run trials over a grid of n", *swp);
  sweep->add_option("--n-grid", swp->n_grid, "Comma-separated vertex counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(4u, 1u << 20));
  sweep->callback([&ctx, swp] { execute(ctx, *swp, true); });
}

}  // namespace cyclebuy::cli
