#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cyclebuy/composite.hpp"
#include "cyclebuy/registry.hpp"
#include "cyclebuy/rng.hpp"

namespace cyclebuy {

enum class Model { kRom, kPom };

std::string_view to_string(Model model);
// Accepts "rom" / "pom"; throws std::invalid_argument otherwise.
Model parse_model(std::string_view text);

struct ExperimentConfig {
  Model model = Model::kRom;
  std::string strategy_id;
  std::optional<std::uint32_t> k;  // tree-p3
  double threshold = 0.5;          // naive-threshold
  std::vector<std::uint32_t> n_grid;
  std::uint64_t trials = 0;
  SeedSpec seed;
  unsigned workers = 1;

  // Throws std::invalid_argument on zero trials, an empty grid, n < 4, or
  // an unknown strategy.
  void validate() const;
};

// Per-trial outcome kept for aggregation.
struct TrialRecord {
  double cost = 0.0;
  bool success = false;
  bool fallback = false;
  std::optional<std::uint32_t> end_size;
};

struct StatsSummary {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  double success_rate = 0.0;
  double fallback_rate = 0.0;
  std::optional<double> mean_end_size;
  // Conditional on no fallback.
  std::uint64_t nonfallback_trials = 0;
  double nonfallback_mean = 0.0;
  double nonfallback_std = 0.0;

  double standard_error() const;
  double nonfallback_standard_error() const;
};

// Aggregates in index order (Welford), so the result depends only on the
// sequence of records.
StatsSummary summarize(const std::vector<TrialRecord>& records);

struct ExperimentRow {
  std::uint32_t n = 0;
  std::optional<std::uint32_t> k;
  StatsSummary stats;
  std::vector<TrialRecord> records;
};

// Seed of trial `trial` at size `n`: seed.child("n", n).child("trial", trial).
SeedSpec trial_seed(SeedSpec master, std::uint32_t n, std::uint64_t trial);

// One trial: sample costs, then ROM (rom_order) or POM (pom_randomizer),
// both driven by trial_seed.
RunResult run_trial(const ExperimentConfig& config, std::uint32_t n, std::uint64_t trial);

// Runs config.trials trials per grid point on config.workers threads. The
// output is identical for any worker count.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// Fixed CSV schema:
// model,strategy,n,k,trials,mean_cost,std_cost,ci95_lo,ci95_hi,
// success_rate,fallback_rate,mean_end_size,seed
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ExperimentConfig& config, const ExperimentRow& row);

struct EndRuleEstimate {
  double mean_cost = 0.0;
  double standard_error = 0.0;
  double purchase_rate = 0.0;
  std::uint64_t trials = 0;
};

// Offers m i.i.d. Uniform[0,1) costs to a fresh END rule per trial. The
// mean is over all trials; a trial without a purchase pays 0.
EndRuleEstimate simulate_end_rule(EndRuleKind kind, std::uint32_t m, std::uint32_t n,
                                  std::uint64_t trials, SeedSpec seed);

// %.9g formatting used for every floating-point output field.
std::string format_real(double value);

}  // namespace cyclebuy
