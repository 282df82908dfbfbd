#include "cyclebuy/streams.hpp"

#include <string>

#include "cyclebuy/graph.hpp"

namespace cyclebuy {

namespace {

class InspectedSet {
 public:
  explicit InspectedSet(std::uint64_t size) : bits_((size + 63) / 64, 0) {}

  // Returns false if `i` was already present.
  bool insert(EdgeIndex i) {
    std::uint64_t& w = bits_[i / 64];
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (w & mask) return false;
    w |= mask;
    return true;
  }

 private:
  std::vector<std::uint64_t> bits_;
};

void apply(const Reveal& reveal, Decision decision, RunResult& result) {
  ++result.inspected_count;
  if (decision == Decision::kBuy) {
    result.purchased.push_back({reveal.index, reveal.cost});
    result.total_cost += reveal.cost;
  }
}

void finalize_structure(std::uint32_t n, RunResult& result) {
  const std::vector<Edge> edges = result.purchased_edges(n);
  result.p3_count = count_paths3(n, edges);
  result.c4_complete = has_cycle4(n, edges);
}

}  // namespace

std::vector<Edge> RunResult::purchased_edges(std::uint32_t n) const {
  std::vector<Edge> edges;
  edges.reserve(purchased.size());
  for (const Purchase& p : purchased) edges.push_back(edge_of_index_unchecked(p.index, n));
  return edges;
}

RevealOrder::RevealOrder(std::vector<EdgeIndex> order) : order_(std::move(order)) {
  InspectedSet seen(order_.size());
  for (EdgeIndex i : order_) {
    if (i >= order_.size() || !seen.insert(i)) {
      throw std::invalid_argument("RevealOrder: not a permutation");
    }
  }
}

RevealOrder rom_order(std::uint64_t edge_count, SeedSpec seed) {
  if (edge_count == 0) throw std::invalid_argument("rom_order: N must be >= 1");
  std::vector<EdgeIndex> order(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) order[i] = static_cast<EdgeIndex>(i);
  Rng rng(seed, "order");
  for (std::uint64_t i = edge_count - 1; i > 0; --i) {
    const std::uint64_t j = rng.below(i + 1);
    std::swap(order[i], order[j]);
  }
  return RevealOrder(std::move(order), RevealOrder::Trusted{});
}

RunResult run_rom(const CostAssignment& assignment, const RevealOrder& order,
                  OnlineStrategy& strategy) {
  if (order.size() != assignment.size()) {
    throw std::invalid_argument("run_rom: order length " + std::to_string(order.size()) +
                                " != edge count " + std::to_string(assignment.size()));
  }
  const std::uint32_t n = assignment.n();
  const auto& seq = order.order();
  const auto costs = assignment.costs();
  RunResult result;
  result.strategy_id = std::string(strategy.id());
  strategy.begin({n, assignment.size()});
  for (std::uint64_t t = 0; t < seq.size(); ++t) {
    if (!strategy.wants_more()) break;
    if (t + 16 < seq.size()) __builtin_prefetch(&costs[seq[t + 16]]);
    const Reveal reveal{t, seq[t], costs[seq[t]], n};
    apply(reveal, strategy.on_reveal(reveal), result);
  }
  strategy.finish(result);
  finalize_structure(n, result);
  return result;
}

RunResult run_pom(const CostAssignment& assignment, PomController& controller) {
  const std::uint32_t n = assignment.n();
  const std::uint64_t N = assignment.size();
  InspectedSet inspected(N);
  RunResult result;
  result.strategy_id = std::string(controller.id());
  controller.begin({n, N});
  while (result.inspected_count < N) {
    const std::optional<EdgeIndex> next = controller.next_edge();
    if (!next) break;
    if (*next >= N) {
      throw ProtocolViolation("run_pom: edge index " + std::to_string(*next) + " out of range");
    }
    if (!inspected.insert(*next)) {
      throw ProtocolViolation("run_pom: edge " + std::to_string(*next) + " already inspected");
    }
    const Reveal reveal{result.inspected_count, *next, assignment[*next], n};
    apply(reveal, controller.on_reveal(reveal), result);
  }
  controller.finish(result);
  finalize_structure(n, result);
  return result;
}

namespace {

class RandomOrderController final : public PomController {
 public:
  RandomOrderController(std::unique_ptr<OnlineStrategy> strategy, SeedSpec seed)
      : strategy_(std::move(strategy)), seed_(seed) {}

  std::string_view id() const override { return strategy_->id(); }

  void begin(const RunContext& ctx) override {
    order_ = rom_order(ctx.edge_count, seed_).order();
    next_ = 0;
    strategy_->begin(ctx);
  }

  std::optional<EdgeIndex> next_edge() override {
    if (next_ >= order_.size() || !strategy_->wants_more()) return std::nullopt;
    return order_[next_++];
  }

  Decision on_reveal(const Reveal& reveal) override { return strategy_->on_reveal(reveal); }

  void finish(RunResult& result) const override { strategy_->finish(result); }

 private:
  std::unique_ptr<OnlineStrategy> strategy_;
  SeedSpec seed_;
  std::vector<EdgeIndex> order_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<PomController> pom_randomizer(std::unique_ptr<OnlineStrategy> strategy,
                                              SeedSpec seed) {
  if (!strategy) throw std::invalid_argument("pom_randomizer: null strategy");
  return std::make_unique<RandomOrderController>(std::move(strategy), seed);
}

}  // namespace cyclebuy
