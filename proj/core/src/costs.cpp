#include "cyclebuy/costs.hpp"

#include <stdexcept>
#include <string>

namespace cyclebuy {

CostAssignment::CostAssignment(std::uint32_t n, std::vector<double> costs)
    : n_(n), costs_(std::move(costs)) {
  if (n < 2) throw std::invalid_argument("CostAssignment: n must be >= 2");
  if (costs_.size() != edge_count(n)) {
    throw std::invalid_argument("CostAssignment: expected " +
                                std::to_string(edge_count(n)) + " costs, got " +
                                std::to_string(costs_.size()));
  }
  for (double c : costs_) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::invalid_argument("CostAssignment: cost outside [0,1]: " +
                                  std::to_string(c));
    }
  }
}

CostAssignment sample_costs(std::uint32_t n, SeedSpec seed) {
  if (n < 2) throw std::invalid_argument("sample_costs: n must be >= 2");
  Rng rng(seed, "costs");
  std::vector<double> costs(edge_count(n));
  for (double& c : costs) c = rng.uniform01();
  return CostAssignment(n, std::move(costs));
}

}  // namespace cyclebuy
