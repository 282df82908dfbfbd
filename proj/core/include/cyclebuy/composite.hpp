#pragma once

#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "cyclebuy/end_rules.hpp"
#include "cyclebuy/tree.hpp"

namespace cyclebuy {

// Stationary point of 4 k^0.8 / n + 20 / k: k = round((6.25 n)^(5/9)),
// clamped to [ceil(sqrt n), n]. Throws std::invalid_argument if n < 30.
std::uint32_t choose_k(std::uint32_t n);

enum class EndRuleKind { kSecretary, kWhp };

// Buys a C4: the tree strategy for choose_k(n) paths in the first two
// thirds of the stream, then one closing edge from the END set in the last
// third.
class CompositeC4Strategy final : public OnlineStrategy {
 public:
  // Throws std::invalid_argument if n < 30.
  explicit CompositeC4Strategy(std::uint32_t n, EndRuleKind kind = EndRuleKind::kSecretary);

  std::string_view id() const override;
  void begin(const RunContext& ctx) override;
  Decision on_reveal(const Reveal& reveal) override;
  bool wants_more() const override;
  void finish(RunResult& result) const override;

  const TreeParams& params() const { return tree_.params(); }
  // Available once the boundary has been crossed without fallback.
  const std::optional<EndState>& end_state() const { return end_; }

 private:
  void open_end_phase();
  Decision on_end_reveal(const Reveal& reveal);

  std::uint32_t n_;
  EndRuleKind kind_;
  TreeStrategy tree_;
  std::vector<std::uint64_t> revealed_;  // bitset over edge indices, first 2N/3 only
  bool end_opened_ = false;
  std::optional<EndState> end_;
  std::unique_ptr<EndRule> rule_;
  std::vector<std::uint8_t> end_vertex_;
  std::unordered_set<EdgeIndex> end_set_;
};

}  // namespace cyclebuy
