#include <chrono>
#include <cmath>
#include <memory>

#include <CLI11.hpp>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cyclebuy/experiments.hpp"
#include "cyclebuy/graph.hpp"
#include "cyclebuy/oracle.hpp"

namespace cyclebuy::cli {

namespace {

// Brute force up to this n; the fast counters beyond it.
constexpr std::uint32_t kBruteForceLimit = 64;

struct OracleOptions {
  std::uint32_t m = 1;
  bool table = false;
  std::uint64_t mc_trials = 0;
  std::uint64_t seed = 0;
  std::string edges;
  std::optional<std::uint32_t> n;
  std::string out;
  std::string manifest;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish(Context& ctx, const std::string& name, const OracleOptions& o,
            const nlohmann::json& result, const nlohmann::json& echo,
            std::optional<std::uint64_t> seed, Clock::time_point start) {
  emit(ctx, "oracle " + name, o.out, o.manifest, result.dump(2) + "\n", echo, result, seed,
       since(start));
  ctx.exit_code = kOk;
}

void run_table(Context& ctx, const std::string& name, const OracleOptions& o) {
  const auto start = Clock::now();
  const bool policy = name == "policy";
  const oracle::ValueTable t = policy ? oracle::paper_policy_expectation(o.m) : oracle::moser_dp(o.m);
  nlohmann::json result;
  result["m"] = o.m;
  result["value"] = t.at(o.m);
  if (policy) result["bound_2_over_m"] = 2.0 / o.m;
  if (o.table) result["table"] = t.values();

  nlohmann::json echo{{"m", o.m}, {"table", o.table}};
  std::optional<std::uint64_t> seed;
  if (policy && o.mc_trials > 0) {
    const EndRuleEstimate mc =
        simulate_end_rule(EndRuleKind::kSecretary, o.m, std::max<std::uint32_t>(o.m, 4),
                          o.mc_trials, SeedSpec(o.seed));
    const double z = mc.standard_error > 0.0 ? (mc.mean_cost - t.at(o.m)) / mc.standard_error : 0.0;
    result["monte_carlo"] = {{"mean_cost", mc.mean_cost},
                             {"standard_error", mc.standard_error},
                             {"purchase_rate", mc.purchase_rate},
                             {"trials", mc.trials},
                             {"z", z},
                             {"within_3se", std::abs(z) <= 3.0}};
    echo["mc-trials"] = o.mc_trials;
    echo["seed"] = o.seed;
    seed = o.seed;
  }
  finish(ctx, name, o, result, echo, seed, start);
}

void run_graph(Context& ctx, const std::string& name, const OracleOptions& o) {
  const auto start = Clock::now();
  const EdgeList list = read_edge_list(o.edges, o.n);
  nlohmann::json result;
  result["n"] = list.n;
  result["edges"] = list.edges.size();
  const bool brute = list.n <= kBruteForceLimit;
  result["method"] = brute ? "exhaustive" : "fast";
  if (name == "count-p3") {
    result["p3_count"] = brute ? oracle::count_p3(list.n, list.edges)
                               : count_paths3(list.n, list.edges);
  } else {
    result["contains_c4"] = brute ? oracle::contains_c4(list.n, list.edges)
                                  : has_cycle4(list.n, list.edges);
  }
  nlohmann::json echo{{"edges", o.edges}};
  if (o.n) echo["n"] = *o.n;
  finish(ctx, name, o, result, echo, std::nullopt, start);
}

void add_output(CLI::App& sub, OracleOptions& o) {
  sub.add_option("--out", o.out, "JSON output path (stdout if omitted)");
  sub.add_option("--manifest", o.manifest, "Manifest path (default <out>.manifest.json)");
}

}  // namespace

void register_oracle(CLI::App& root, Context& ctx) {
  CLI::App* oracle = root.add_subcommand("oracle", "Exact reference computations");
  oracle->require_subcommand(1);

  for (const std::string name : {"moser", "policy"}) {
    auto o = std::make_shared<OracleOptions>();
    CLI::App* sub = oracle->add_subcommand(
        name, name == "moser" ? "Optimal expected cost of buying one of m items"
                              : "Expected payment of the END threshold rule");
    sub->add_option("--m", o->m, "Number of items")->required()->check(CLI::Range(1u, 100'000'000u));
    sub->add_flag("--table", o->table, "Also print the values for 1..m");
    if (name == "policy") {
      sub->add_option("--mc-trials", o->mc_trials, "Monte Carlo cross-check trials");
      sub->add_option("--seed", o->seed, "Monte Carlo seed")->capture_default_str();
    }
    add_output(*sub, *o);
    sub->callback([&ctx, name, o] { run_table(ctx, name, *o); });
  }

  for (const std::string name : {"count-p3", "contains-c4"}) {
    auto o = std::make_shared<OracleOptions>();
    CLI::App* sub = oracle->add_subcommand(
        name, name == "count-p3" ? "Count 3-edge paths" : "Test for a 4-cycle");
    sub->add_option("--edges", o->edges, "Edge-list file, one 'u v' per line")->required();
    sub->add_option("--n", o->n, "Number of vertices (default max vertex + 1)");
    add_output(*sub, *o);
    sub->callback([&ctx, name, o] { run_graph(ctx, name, *o); });
  }
}

}  // namespace cyclebuy::cli
