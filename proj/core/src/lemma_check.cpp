#include "cyclebuy/lemma_check.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cyclebuy::lemma {

TailValue uniform_sum_tail(std::uint32_t r, double theta) {
  if (r < 1) throw std::invalid_argument("uniform_sum_tail: r must be >= 1");
  if (!(theta >= 0.0)) throw std::invalid_argument("uniform_sum_tail: theta must be >= 0");
  // theta^r / r! accumulated as a product to avoid overflow for large r.
  double value = 1.0;
  for (std::uint32_t i = 1; i <= r; ++i) value *= theta / i;
  if (theta <= 1.0) return {value, true};
  return {std::min(value, 1.0), false};
}

std::pair<double, double> chernoff_bounds(double mu, double eps) {
  if (!(mu > 0.0)) throw std::invalid_argument("chernoff_bounds: mu must be > 0");
  if (!(eps >= 0.0)) throw std::invalid_argument("chernoff_bounds: eps must be >= 0");
  return {std::exp(-eps * eps * mu / 2.0), std::exp(-eps * eps * mu / (2.0 + eps))};
}

namespace {

double binomial(std::uint32_t n, std::uint32_t k) {
  double b = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Advances a sorted k-combination of [0, n); false when exhausted.
bool next_combination(std::vector<Vertex>& c, std::uint32_t n) {
  const auto k = static_cast<std::uint32_t>(c.size());
  for (std::uint32_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ViolationReport> check_event_A(const CostAssignment& assignment,
                                           std::uint32_t alpha_max) {
  const std::uint32_t n = assignment.n();
  if (alpha_max < 1 || alpha_max > n) {
    throw std::invalid_argument("check_event_A: alpha_max must lie in [1, n]");
  }
  double subsets = 0.0;
  for (std::uint32_t a = 1; a <= alpha_max; ++a) subsets += binomial(n, a);
  if (subsets > 1e6) {
    throw std::invalid_argument("check_event_A: exhaustive search over " +
                                std::to_string(static_cast<long long>(subsets)) +
                                " vertex sets exceeds the 1e6 guard");
  }
  const double log_sq = std::log(static_cast<double>(n)) * std::log(static_cast<double>(n));

  std::vector<ViolationReport> reports;
  std::vector<std::uint8_t> in_f(n, 0);
  std::vector<std::pair<double, EdgeIndex>> incident;
  for (std::uint32_t alpha = 1; alpha <= alpha_max; ++alpha) {
    const auto beta_min = static_cast<std::uint32_t>(std::ceil(alpha * log_sq));
    std::vector<Vertex> f(alpha);
    std::iota(f.begin(), f.end(), 0);
    do {
      std::fill(in_f.begin(), in_f.end(), 0);
      for (Vertex x : f) in_f[x] = 1;
      incident.clear();
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (in_f[u] || in_f[v]) {
            const EdgeIndex idx = edge_index_unchecked(u, v, n);
            incident.emplace_back(assignment[idx], idx);
          }
        }
      std::sort(incident.begin(), incident.end());
      // One witness per F: the largest violating beta.
      double prefix = 0.0;
      std::optional<ViolationReport> widest;
      for (std::uint32_t beta = 1; beta <= incident.size(); ++beta) {
        prefix += incident[beta - 1].first;
        if (beta < beta_min) continue;
        const double threshold =
            static_cast<double>(beta) * beta / (10.0 * alpha * static_cast<double>(n));
        if (prefix <= threshold) {
          ViolationReport rep;
          rep.kind = EventKind::kEventA;
          rep.alpha = alpha;
          rep.beta = beta;
          rep.F = f;
          rep.observed_cost = prefix;
          rep.threshold = threshold;
          widest = std::move(rep);
        }
      }
      if (widest) {
        for (std::uint32_t i = 0; i < widest->beta; ++i) {
          widest->H.push_back(edge_of_index_unchecked(incident[i].second, n));
        }
        reports.push_back(std::move(*widest));
      }
    } while (next_combination(f, n));
  }
  return reports;
}

double eval_g(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta) {
  if (alpha < 1 || beta < 1 || n < 1) {
    throw std::invalid_argument("eval_g: n, alpha and beta must be >= 1");
  }
  const double dn = n, a = alpha, b = beta;
  const double e = std::numbers::e;
  return std::pow(dn, -4.0 / b) * std::pow(a / (e * dn), a / b) * std::pow(b / (e * a), 2.0);
}

std::vector<ViolationReport> check_event_B_scaled(const CostAssignment& assignment,
                                                  std::uint32_t min_edges,
                                                  double min_avg_degree, double floor) {
  const std::uint32_t n = assignment.n();
  if (n > 7) {
    throw std::invalid_argument("check_event_B_scaled: exhaustive mode needs n <= 7 (got " +
                                std::to_string(n) + ")");
  }
  const auto N = static_cast<std::uint32_t>(assignment.size());
  std::vector<Edge> edges(N);
  for (EdgeIndex i = 0; i < N; ++i) edges[i] = edge_of_index_unchecked(i, n);

  std::vector<ViolationReport> reports;
  for (std::uint32_t mask = 1; mask < (1U << N); ++mask) {
    const auto m = static_cast<std::uint32_t>(std::popcount(mask));
    if (m < min_edges) continue;
    std::uint32_t support = 0;
    double cost = 0.0;
    for (EdgeIndex i = 0; i < N; ++i) {
      if (mask >> i & 1) {
        support |= (1U << edges[i].u) | (1U << edges[i].v);
        cost += assignment[i];
      }
    }
    const auto vertices = static_cast<std::uint32_t>(std::popcount(support));
    if (!(2.0 * m / vertices > min_avg_degree)) continue;
    const auto report = [&](std::string bound, double threshold) {
      ViolationReport rep;
      rep.kind = EventKind::kEventB;
      rep.bound = std::move(bound);
      rep.alpha = vertices;
      rep.beta = m;
      for (Vertex v = 0; v < n; ++v)
        if (support >> v & 1) rep.F.push_back(v);
      for (EdgeIndex i = 0; i < N; ++i)
        if (mask >> i & 1) rep.H.push_back(edges[i]);
      rep.observed_cost = cost;
      rep.threshold = threshold;
      reports.push_back(std::move(rep));
    };
    if (cost < floor) report("floor", floor);
    if (const double g = eval_g(n, vertices, m); cost < g) report("g", g);
  }
  return reports;
}

MonteCarloEstimate simulate_uniform_sum(std::uint32_t r, double theta, std::uint64_t samples,
                                        SeedSpec seed) {
  if (r < 1 || samples < 1) throw std::invalid_argument("simulate_uniform_sum: r, samples >= 1");
  Rng rng(seed, "uniform-sum");
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double sum = 0.0;
    for (std::uint32_t i = 0; i < r; ++i) sum += rng.uniform01();
    if (sum <= theta) ++hits;
  }
  const double p = static_cast<double>(hits) / samples;
  return {p, std::sqrt(p * (1.0 - p) / samples), samples};
}

MonteCarloEstimate simulate_binomial_lower_tail(std::uint32_t trials, double p, double eps,
                                                std::uint64_t samples, SeedSpec seed) {
  if (trials < 1 || samples < 1 || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("simulate_binomial_lower_tail: invalid parameters");
  }
  Rng rng(seed, "binomial");
  const double cutoff = (1.0 - eps) * trials * p;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint32_t x = 0;
    for (std::uint32_t i = 0; i < trials; ++i) x += rng.uniform01() < p ? 1 : 0;
    if (x <= cutoff + 1e-9) ++hits;
  }
  const double f = static_cast<double>(hits) / samples;
  return {f, std::sqrt(f * (1.0 - f) / samples), samples};
}

}  // namespace cyclebuy::lemma
