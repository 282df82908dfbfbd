#include "cyclebuy/end_rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cyclebuy {

EndState determine_end(std::uint32_t n, std::span<const Edge> pairs, const RevealOrder& order,
                       std::uint64_t boundary) {
  std::unordered_map<EdgeIndex, std::uint64_t> position;
  for (const Edge& p : pairs) {
    if (!position.emplace(edge_index(p, n), 0).second) {
      throw std::invalid_argument("determine_end: duplicate endpoint pair");
    }
  }
  for (std::uint64_t t = 0; t < order.size(); ++t) {
    if (auto it = position.find(order[t]); it != position.end()) it->second = t;
  }
  EndState state;
  state.pairs.assign(pairs.begin(), pairs.end());
  std::vector<std::pair<std::uint64_t, EdgeIndex>> late;
  for (const auto& [index, t] : position) {
    if (t >= boundary) late.emplace_back(t, index);
  }
  std::sort(late.begin(), late.end());
  for (const auto& entry : late) state.end_edges.push_back(entry.second);
  state.m = static_cast<std::uint32_t>(state.end_edges.size());
  return state;
}

EndRule::EndRule(std::uint32_t m) : m_(m) {
  if (m == 0) throw std::invalid_argument("EndRule: END set is empty");
}

bool EndRule::offer(double cost) {
  if (exhausted()) return false;
  const std::uint32_t remaining = m_ - examined_;
  ++examined_;
  if (accepts(cost, threshold(remaining))) {
    bought_ = true;
    return true;
  }
  return false;
}

double SecretaryEndRule::threshold(std::uint32_t remaining) const {
  if (remaining <= 1) return 1.0;
  return std::min(2.0 / (remaining - 1), 1.0);
}

WhpEndRule::WhpEndRule(std::uint32_t m, std::uint32_t n)
    : EndRule(m), threshold_(std::min(std::log(static_cast<double>(n)) / m, 1.0)) {}

double WhpEndRule::threshold(std::uint32_t /*remaining*/) const { return threshold_; }

}  // namespace cyclebuy
