#pragma once

// Reference computations that do not share code paths with the simulator:
// exact stopping recursions and brute-force subgraph counts for small n.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclebuy/edge.hpp"

namespace cyclebuy::oracle {

// Expected costs indexed by m = 1..m_max.
class ValueTable {
 public:
  explicit ValueTable(std::vector<double> values) : values_(std::move(values)) {}

  std::uint32_t m_max() const { return static_cast<std::uint32_t>(values_.size()); }
  // 1-based; throws std::out_of_range outside [1, m_max].
  double at(std::uint32_t m) const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Optimal expected cost of buying exactly one of m sequential Uniform[0,1)
// items: V(1) = 1/2, V(s) = V(s-1) - V(s-1)^2 / 2.
ValueTable moser_dp(std::uint32_t m_max);

// Exact expected payment of the END threshold rule r_s = min(2/(s-1), 1):
// c(1) = 1/2, c(s) = r_s^2 / 2 + c(s-1) (1 - r_s).
ValueTable paper_policy_expectation(std::uint32_t m_max);

// Exhaustive count of 3-edge paths over ordered vertex quadruples.
// Throws std::invalid_argument if n > 64 or an edge lies outside K_n.
std::uint64_t count_p3(std::uint32_t n, std::span<const Edge> edges);

// Exhaustive check over all 4-vertex subsets and their three 4-cycles.
bool contains_c4(std::uint32_t n, std::span<const Edge> edges);

}  // namespace cyclebuy::oracle
