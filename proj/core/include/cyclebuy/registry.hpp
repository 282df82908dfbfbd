#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cyclebuy/streams.hpp"

namespace cyclebuy {

struct StrategyOptions {
  std::uint32_t n = 0;
  std::optional<std::uint32_t> k;  // tree-p3 only
  double threshold = 0.5;          // naive-threshold only
};

// Stable identifiers accepted by make_strategy.
std::span<const std::string_view> strategy_ids();

// Throws std::invalid_argument for unknown ids or missing/invalid options.
std::unique_ptr<OnlineStrategy> make_strategy(std::string_view id, const StrategyOptions& options);

// Target size the strategy is built for (k for tree-p3, choose_k(n) for the
// composites), or nullopt for the baselines.
std::optional<std::uint32_t> strategy_k(std::string_view id, const StrategyOptions& options);

// Whether a finished run achieved the strategy's goal: k paths for tree-p3,
// a C4 for everything else.
bool run_succeeded(std::string_view id, const StrategyOptions& options, const RunResult& run);

}  // namespace cyclebuy
