#pragma once

// Reveal models. In the randomly ordered model (ROM) a uniform permutation
// fixes the inspection order; in the purchaser ordered model (POM) the
// controller names the next edge itself. Either way a strategy sees one
// (step, edge, cost) event at a time and answers Buy or Skip immediately;
// it never gets a handle on the cost assignment.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclebuy/costs.hpp"
#include "cyclebuy/edge.hpp"
#include "cyclebuy/rng.hpp"

namespace cyclebuy {

enum class Decision : std::uint8_t { kSkip, kBuy };

struct RunContext {
  std::uint32_t n = 0;
  std::uint64_t edge_count = 0;
};

struct Reveal {
  std::uint64_t step = 0;  // 0-based position in the inspection sequence
  EdgeIndex index = 0;
  double cost = 0.0;
  std::uint32_t n = 0;

  Edge edge() const { return edge_of_index_unchecked(index, n); }
};

struct Purchase {
  EdgeIndex index = 0;
  double cost = 0.0;

  friend bool operator==(const Purchase&, const Purchase&) = default;
};

struct RunResult {
  std::vector<Purchase> purchased;  // append-only, in purchase order
  double total_cost = 0.0;
  std::uint64_t inspected_count = 0;
  std::uint64_t p3_count = 0;
  bool c4_complete = false;
  bool fallback_triggered = false;
  std::optional<std::uint32_t> end_size;
  std::string strategy_id;
  std::string notes;

  std::vector<Edge> purchased_edges(std::uint32_t n) const;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Thrown when a POM controller breaks the inspection protocol.
class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OnlineStrategy {
 public:
  virtual ~OnlineStrategy() = default;

  virtual std::string_view id() const = 0;
  virtual void begin(const RunContext& /*ctx*/) {}
  virtual Decision on_reveal(const Reveal& reveal) = 0;
  // Returning false stops inspection; the rest count as skipped.
  virtual bool wants_more() const { return true; }
  // Strategy-specific fields (fallback flag, END size, notes).
  virtual void finish(RunResult& /*result*/) const {}
};

class PomController {
 public:
  virtual ~PomController() = default;

  virtual std::string_view id() const = 0;
  virtual void begin(const RunContext& /*ctx*/) {}
  // Next edge to inspect, or nullopt to halt.
  virtual std::optional<EdgeIndex> next_edge() = 0;
  virtual Decision on_reveal(const Reveal& reveal) = 0;
  virtual void finish(RunResult& /*result*/) const {}
};

class RevealOrder {
 public:
  // Throws std::invalid_argument unless `order` is a permutation of [0, N).
  explicit RevealOrder(std::vector<EdgeIndex> order);

  std::size_t size() const { return order_.size(); }
  EdgeIndex operator[](std::size_t t) const { return order_[t]; }
  const std::vector<EdgeIndex>& order() const { return order_; }

 private:
  struct Trusted {};
  RevealOrder(std::vector<EdgeIndex> order, Trusted) : order_(std::move(order)) {}
  friend RevealOrder rom_order(std::uint64_t, SeedSpec);

  std::vector<EdgeIndex> order_;
};

// Uniform permutation of [0, N) (Fisher-Yates on the "order" stream of
// `seed`). Throws std::invalid_argument if N == 0.
RevealOrder rom_order(std::uint64_t edge_count, SeedSpec seed);

// Throws std::invalid_argument if the order does not match the assignment.
RunResult run_rom(const CostAssignment& assignment, const RevealOrder& order,
                  OnlineStrategy& strategy);

// Throws ProtocolViolation if the controller names an inspected or
// out-of-range edge.
RunResult run_pom(const CostAssignment& assignment, PomController& controller);

// POM controller that inspects in rom_order(N, seed) and delegates every
// decision to `strategy`. Replays run_rom exactly.
std::unique_ptr<PomController> pom_randomizer(std::unique_ptr<OnlineStrategy> strategy,
                                              SeedSpec seed);

}  // namespace cyclebuy
