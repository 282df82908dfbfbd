#include "cyclebuy/registry.hpp"

#include <array>
#include <stdexcept>

#include "cyclebuy/baselines.hpp"
#include "cyclebuy/composite.hpp"
#include "cyclebuy/tree.hpp"

namespace cyclebuy {

namespace {

constexpr std::array<std::string_view, 6> kIds = {
    "tree-p3", "c4-composite", "c4-composite-whp", "buy-all", "buy-none", "naive-threshold"};

}  // namespace

std::span<const std::string_view> strategy_ids() { return kIds; }

std::unique_ptr<OnlineStrategy> make_strategy(std::string_view id, const StrategyOptions& options) {
  if (id == "tree-p3") {
    if (!options.k) throw std::invalid_argument("tree-p3 requires k");
    return std::make_unique<TreeStrategy>(plan_tree_params(options.n, *options.k));
  }
  if (id == "c4-composite") return std::make_unique<CompositeC4Strategy>(options.n);
  if (id == "c4-composite-whp") {
    return std::make_unique<CompositeC4Strategy>(options.n, EndRuleKind::kWhp);
  }
  if (id == "buy-all") return std::make_unique<BuyAllStrategy>();
  if (id == "buy-none") return std::make_unique<BuyNoneStrategy>();
  if (id == "naive-threshold") return std::make_unique<NaiveThresholdStrategy>(options.threshold);
  throw std::invalid_argument("unknown strategy id: " + std::string(id));
}

std::optional<std::uint32_t> strategy_k(std::string_view id, const StrategyOptions& options) {
  if (id == "tree-p3") return options.k;
  if (id == "c4-composite" || id == "c4-composite-whp") return choose_k(options.n);
  return std::nullopt;
}

bool run_succeeded(std::string_view id, const StrategyOptions& options, const RunResult& run) {
  if (id == "tree-p3") return options.k && run.p3_count >= *options.k;
  return run.c4_complete;
}

}  // namespace cyclebuy
