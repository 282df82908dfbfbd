#pragma once

// Checkers for the probabilistic facts the lower-bound argument rests on:
// Chernoff tails, the uniform-sum simplex bound, and exhaustive searches for
// cheap edge sets concentrated on few vertices (event A) or dense cheap
// subgraphs (event B, with desk-scale constants).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclebuy/costs.hpp"
#include "cyclebuy/edge.hpp"
#include "cyclebuy/rng.hpp"

namespace cyclebuy::lemma {

enum class EventKind { kEventA, kEventB };

struct ViolationReport {
  EventKind kind = EventKind::kEventA;
  // Event B only: "floor" for c(H) < floor, "g" for c(H) < g(|V(H)|, |E(H)|).
  std::string bound;
  std::uint32_t alpha = 0;  // |F| for event A, |V(H)| for event B
  std::uint32_t beta = 0;   // |H|
  std::vector<Vertex> F;
  std::vector<Edge> H;
  double observed_cost = 0.0;
  double threshold = 0.0;
};

struct TailValue {
  double probability = 0.0;
  bool exact = true;  // false when theta > 1 and only the bound is returned
};

// P(X_1 + ... + X_r <= theta) for i.i.d. Uniform[0,1]: theta^r / r! when
// theta <= 1, else min(theta^r / r!, 1) flagged as a bound.
// Throws std::invalid_argument if r < 1 or theta < 0.
TailValue uniform_sum_tail(std::uint32_t r, double theta);

// (exp(-eps^2 mu / 2), exp(-eps^2 mu / (2 + eps))) for the lower and upper
// binomial tails. Throws std::invalid_argument if mu <= 0 or eps < 0.
std::pair<double, double> chernoff_bounds(double mu, double eps);

// Exhaustive event-A audit up to |F| = alpha_max. For each F the cheapest
// beta edges incident to F minimise c(H), so scanning prefix sums of the
// sorted incident costs is exact. beta runs from ceil(alpha ln^2 n). Each
// violating F is reported once, with its largest violating beta.
// Throws std::invalid_argument if more than 1e6 vertex sets would be scanned.
std::vector<ViolationReport> check_event_A(const CostAssignment& assignment,
                                           std::uint32_t alpha_max);

// g(alpha, beta) = n^(-4/beta) (alpha/(e n))^(alpha/beta) (beta/(e alpha))^2.
double eval_g(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta);

// Exhaustive scan of every edge subset H (n <= 7) with |E(H)| >= min_edges
// and average degree over V(H) above min_avg_degree. Reports c(H) < floor
// and, separately, c(H) < g(|V(H)|, |E(H)|).
std::vector<ViolationReport> check_event_B_scaled(const CostAssignment& assignment,
                                                  std::uint32_t min_edges,
                                                  double min_avg_degree, double floor);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

// Frequency of {X_1 + ... + X_r <= theta}.
MonteCarloEstimate simulate_uniform_sum(std::uint32_t r, double theta, std::uint64_t samples,
                                        SeedSpec seed);

// Frequency of {Bin(trials, p) <= (1 - eps) trials p}.
MonteCarloEstimate simulate_binomial_lower_tail(std::uint32_t trials, double p, double eps,
                                                std::uint64_t samples, SeedSpec seed);

}  // namespace cyclebuy::lemma
