#include "cyclebuy/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclebuy::oracle {

namespace {

std::vector<std::vector<std::uint8_t>> adjacency(std::uint32_t n, std::span<const Edge> edges) {
  if (n > 64) throw std::invalid_argument("oracle: brute-force enumeration limited to n <= 64");
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (const Edge& e : edges) {
    if (!(e.u < e.v && e.v < n)) throw std::invalid_argument("oracle: edge outside K_n");
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }
  return adj;
}

void require_positive(std::uint32_t m_max) {
  if (m_max < 1) throw std::invalid_argument("oracle: m_max must be >= 1");
}

}  // namespace

double ValueTable::at(std::uint32_t m) const {
  if (m < 1 || m > values_.size()) {
    throw std::out_of_range("ValueTable: m=" + std::to_string(m) + " outside [1, " +
                            std::to_string(values_.size()) + "]");
  }
  return values_[m - 1];
}

ValueTable moser_dp(std::uint32_t m_max) {
  require_positive(m_max);
  std::vector<double> v(m_max);
  v[0] = 0.5;
  // With s items left, accept iff cost < V(s-1); E[min(X, v)] = v - v^2/2.
  for (std::uint32_t s = 2; s <= m_max; ++s) {
    const double prev = v[s - 2];
    v[s - 1] = prev - prev * prev / 2.0;
  }
  return ValueTable(std::move(v));
}

ValueTable paper_policy_expectation(std::uint32_t m_max) {
  require_positive(m_max);
  std::vector<double> c(m_max);
  c[0] = 0.5;
  for (std::uint32_t s = 2; s <= m_max; ++s) {
    const double r = std::min(2.0 / (s - 1), 1.0);
    c[s - 1] = r * r / 2.0 + c[s - 2] * (1.0 - r);
  }
  return ValueTable(std::move(c));
}

std::uint64_t count_p3(std::uint32_t n, std::span<const Edge> edges) {
  const auto adj = adjacency(n, edges);
  std::uint64_t ordered = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (b == a || !adj[a][b]) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (c == a || c == b || !adj[b][c]) continue;
        for (std::uint32_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c || !adj[c][d]) continue;
          ++ordered;
        }
      }
    }
  // Each path is found once from each end.
  return ordered / 2;
}

bool contains_c4(std::uint32_t n, std::span<const Edge> edges) {
  const auto adj = adjacency(n, edges);
  const auto cycle = [&](std::uint32_t w, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return adj[w][x] && adj[x][y] && adj[y][z] && adj[z][w];
  };
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = b + 1; c < n; ++c)
        for (std::uint32_t d = c + 1; d < n; ++d) {
          if (cycle(a, b, c, d) || cycle(a, b, d, c) || cycle(a, c, b, d)) return true;
        }
  return false;
}

}  // namespace cyclebuy::oracle
