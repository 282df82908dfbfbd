#pragma once

#include "cyclebuy/streams.hpp"

namespace cyclebuy {

class BuyAllStrategy final : public OnlineStrategy {
 public:
  std::string_view id() const override { return "buy-all"; }
  Decision on_reveal(const Reveal&) override { return Decision::kBuy; }
};

class BuyNoneStrategy final : public OnlineStrategy {
 public:
  std::string_view id() const override { return "buy-none"; }
  Decision on_reveal(const Reveal&) override { return Decision::kSkip; }
};

// Buys every edge whose cost is at most `threshold`.
class NaiveThresholdStrategy final : public OnlineStrategy {
 public:
  explicit NaiveThresholdStrategy(double threshold);
  std::string_view id() const override { return "naive-threshold"; }
  Decision on_reveal(const Reveal& reveal) override {
    return reveal.cost <= threshold_ ? Decision::kBuy : Decision::kSkip;
  }

 private:
  double threshold_;
};

}  // namespace cyclebuy
