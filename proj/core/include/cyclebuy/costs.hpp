#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclebuy/edge.hpp"
#include "cyclebuy/rng.hpp"

namespace cyclebuy {

// Realized edge costs of K_n, indexed by edge_index.
class CostAssignment {
 public:
  // Validates length N = n(n-1)/2 and every entry in [0, 1]. Sampled costs
  // never reach 1; the closed end admits hand-written extremes.
  CostAssignment(std::uint32_t n, std::vector<double> costs);

  std::uint32_t n() const { return n_; }
  std::size_t size() const { return costs_.size(); }
  double operator[](EdgeIndex i) const { return costs_[i]; }
  double cost(Edge e) const { return costs_[edge_index_unchecked(e.u, e.v, n_)]; }
  std::span<const double> costs() const { return costs_; }

 private:
  std::uint32_t n_;
  std::vector<double> costs_;
};

// N i.i.d. Uniform[0,1) draws from the "costs" stream of `seed`.
// Throws std::invalid_argument if n < 2.
CostAssignment sample_costs(std::uint32_t n, SeedSpec seed);

}  // namespace cyclebuy
