#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclebuy/edge.hpp"
#include "cyclebuy/streams.hpp"

namespace cyclebuy {

// Closing edges of the tracked P3 endpoint pairs that are still unrevealed
// at the two-thirds boundary. Buying any one of them completes a C4.
struct EndState {
  std::vector<Edge> pairs;
  std::vector<EdgeIndex> end_edges;  // in reveal order
  std::uint32_t m = 0;
  std::uint32_t examined = 0;
};

// Offline form: keeps the pairs whose closing edge sits at 1-based position
// > boundary in `order`, i.e. at 0-based step >= boundary.
EndState determine_end(std::uint32_t n, std::span<const Edge> pairs, const RevealOrder& order,
                       std::uint64_t boundary);

// Sequential rule for buying exactly one END edge.
class EndRule {
 public:
  explicit EndRule(std::uint32_t m);
  virtual ~EndRule() = default;

  // Offer the next END edge; true means buy it. After a purchase every
  // further offer is declined.
  bool offer(double cost);

  std::uint32_t m() const { return m_; }
  std::uint32_t examined() const { return examined_; }
  bool bought() const { return bought_; }
  bool exhausted() const { return bought_ || examined_ == m_; }

  // Acceptance threshold when `remaining` END edges are left, counting the
  // one on offer.
  virtual double threshold(std::uint32_t remaining) const = 0;
  // Whether `cost` passes `threshold` (<= or <, depending on the rule).
  virtual bool accepts(double cost, double threshold) const = 0;

 private:
  std::uint32_t m_;
  std::uint32_t examined_ = 0;
  bool bought_ = false;
};

// Buy iff cost <= min(2 / (s - 1), 1) with s edges left; s = 1 always buys.
class SecretaryEndRule final : public EndRule {
 public:
  using EndRule::EndRule;
  double threshold(std::uint32_t remaining) const override;
  bool accepts(double cost, double threshold) const override { return cost <= threshold; }
};

// Buy the first END edge with cost < min(ln n / m, 1).
class WhpEndRule final : public EndRule {
 public:
  WhpEndRule(std::uint32_t m, std::uint32_t n);
  double threshold(std::uint32_t remaining) const override;
  bool accepts(double cost, double threshold) const override { return cost < threshold; }

 private:
  double threshold_;
};

}  // namespace cyclebuy
