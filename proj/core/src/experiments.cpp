#include "cyclebuy/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cyclebuy/costs.hpp"
#include "cyclebuy/streams.hpp"

namespace cyclebuy {

std::string_view to_string(Model model) { return model == Model::kRom ? "rom" : "pom"; }

Model parse_model(std::string_view text) {
  if (text == "rom") return Model::kRom;
  if (text == "pom") return Model::kPom;
  throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected rom|pom)");
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw std::invalid_argument("experiment: trials must be >= 1");
  if (n_grid.empty()) throw std::invalid_argument("experiment: n grid is empty");
  if (workers == 0) throw std::invalid_argument("experiment: workers must be >= 1");
  for (std::uint32_t n : n_grid) {
    if (n < 4) throw std::invalid_argument("experiment: every n must be >= 4");
    // Constructing once surfaces parameter errors before any worker starts.
    make_strategy(strategy_id, {n, k, threshold});
  }
}

double StatsSummary::standard_error() const {
  return trials > 0 ? std / std::sqrt(static_cast<double>(trials)) : 0.0;
}

double StatsSummary::nonfallback_standard_error() const {
  return nonfallback_trials > 0 ? nonfallback_std / std::sqrt(static_cast<double>(nonfallback_trials))
                                : 0.0;
}

namespace {

struct Welford {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  double sample_std() const {
    return count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1)) : 0.0;
  }
};

}  // namespace

StatsSummary summarize(const std::vector<TrialRecord>& records) {
  StatsSummary s;
  Welford all;
  Welford kept;
  std::uint64_t successes = 0, fallbacks = 0, ends = 0;
  double end_total = 0.0;
  for (const TrialRecord& r : records) {
    all.add(r.cost);
    if (r.success) ++successes;
    if (r.fallback) {
      ++fallbacks;
    } else {
      kept.add(r.cost);
    }
    if (r.end_size) {
      ++ends;
      end_total += *r.end_size;
    }
  }
  s.trials = records.size();
  s.mean = all.mean;
  s.std = all.sample_std();
  const double half = s.trials > 0 ? 1.96 * s.std / std::sqrt(static_cast<double>(s.trials)) : 0.0;
  s.ci95_lo = s.mean - half;
  s.ci95_hi = s.mean + half;
  if (s.trials > 0) {
    s.success_rate = static_cast<double>(successes) / s.trials;
    s.fallback_rate = static_cast<double>(fallbacks) / s.trials;
  }
  if (ends > 0) s.mean_end_size = end_total / static_cast<double>(ends);
  s.nonfallback_trials = kept.count;
  s.nonfallback_mean = kept.mean;
  s.nonfallback_std = kept.sample_std();
  return s;
}

SeedSpec trial_seed(SeedSpec master, std::uint32_t n, std::uint64_t trial) {
  return master.child("n", n).child("trial", trial);
}

RunResult run_trial(const ExperimentConfig& config, std::uint32_t n, std::uint64_t trial) {
  const SeedSpec seed = trial_seed(config.seed, n, trial);
  const CostAssignment costs = sample_costs(n, seed);
  auto strategy = make_strategy(config.strategy_id, {n, config.k, config.threshold});
  if (config.model == Model::kRom) {
    const RevealOrder order = rom_order(costs.size(), seed);
    return run_rom(costs, order, *strategy);
  }
  auto controller = pom_randomizer(std::move(strategy), seed);
  return run_pom(costs, *controller);
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<ExperimentRow> rows;
  for (std::uint32_t n : config.n_grid) {
    const StrategyOptions options{n, config.k, config.threshold};
    ExperimentRow row;
    row.n = n;
    row.k = strategy_k(config.strategy_id, options);
    row.records.resize(config.trials);

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
      for (std::uint64_t t = next++; t < config.trials; t = next++) {
        try {
          const RunResult run = run_trial(config, n, t);
          row.records[t] = {run.total_cost, run_succeeded(config.strategy_id, options, run),
                            run.fallback_triggered, run.end_size};
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = config.trials;
        }
      }
    };
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(config.workers, config.trials));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    row.stats = summarize(row.records);
    rows.push_back(std::move(row));
  }
  return rows;
}

EndRuleEstimate simulate_end_rule(EndRuleKind kind, std::uint32_t m, std::uint32_t n,
                                  std::uint64_t trials, SeedSpec seed) {
  if (m < 1 || trials < 1) throw std::invalid_argument("simulate_end_rule: m, trials >= 1");
  Rng rng(seed, "end-rule");
  Welford paid;
  std::uint64_t purchases = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::unique_ptr<EndRule> rule;
    if (kind == EndRuleKind::kSecretary) {
      rule = std::make_unique<SecretaryEndRule>(m);
    } else {
      rule = std::make_unique<WhpEndRule>(m, n);
    }
    double cost = 0.0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const double c = rng.uniform01();
      if (rule->offer(c)) {
        cost = c;
        ++purchases;
        break;
      }
    }
    paid.add(cost);
  }
  return {paid.mean, paid.sample_std() / std::sqrt(static_cast<double>(trials)),
          static_cast<double>(purchases) / static_cast<double>(trials), trials};
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_csv_header(std::ostream& out) {
  out << "model,strategy,n,k,trials,mean_cost,std_cost,ci95_lo,ci95_hi,success_rate,"
         "fallback_rate,mean_end_size,seed\n";
}

void write_csv_row(std::ostream& out, const ExperimentConfig& config, const ExperimentRow& row) {
  const StatsSummary& s = row.stats;
  out << to_string(config.model) << ',' << config.strategy_id << ',' << row.n << ',';
  if (row.k) out << *row.k;
  out << ',' << s.trials << ',' << format_real(s.mean) << ',' << format_real(s.std) << ','
      << format_real(s.ci95_lo) << ',' << format_real(s.ci95_hi) << ','
      << format_real(s.success_rate) << ',' << format_real(s.fallback_rate) << ',';
  if (s.mean_end_size) out << format_real(*s.mean_end_size);
  out << ',' << config.seed.value() << '\n';
}

}  // namespace cyclebuy
