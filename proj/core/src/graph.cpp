#include "cyclebuy/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cyclebuy {

namespace {

#if defined(__x86_64__) && defined(__GNUC__)
__attribute__((target_clones("popcnt", "default")))
#endif
std::uint64_t intersect_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

class BitMatrix {
 public:
  explicit BitMatrix(std::uint32_t n) : words_((n + 63) / 64), bits_(std::size_t{n} * words_, 0) {}

  bool set(Vertex a, Vertex b) {
    std::uint64_t& w = bits_[std::size_t{a} * words_ + b / 64];
    const std::uint64_t mask = std::uint64_t{1} << (b % 64);
    const bool was = (w & mask) != 0;
    w |= mask;
    return !was;
  }

  // Common neighbours of a and b that are larger than `floor`.
  std::uint64_t common_above(Vertex a, Vertex b, Vertex floor) const {
    const std::size_t first = (std::size_t{floor} + 1) / 64;
    if (first >= words_) return 0;
    const std::uint64_t* ra = &bits_[std::size_t{a} * words_];
    const std::uint64_t* rb = &bits_[std::size_t{b} * words_];
    const std::uint64_t head_mask = ~std::uint64_t{0} << ((floor + 1) % 64);
    return (std::popcount(ra[first] & rb[first] & head_mask)) +
           intersect_count(ra + first + 1, rb + first + 1, words_ - first - 1);
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void check_edges(std::uint32_t n, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (!(e.u < e.v && e.v < n)) throw std::invalid_argument("edge outside K_n");
  }
}

}  // namespace

std::uint64_t count_paths3(std::uint32_t n, std::span<const Edge> edges) {
  check_edges(n, edges);
  BitMatrix adj(n);
  std::vector<Edge> unique;
  unique.reserve(edges.size());
  std::vector<std::uint64_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (adj.set(e.u, e.v)) {
      adj.set(e.v, e.u);
      unique.push_back(e);
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  std::uint64_t walks = 0;
  std::uint64_t triangles = 0;
  for (const Edge& e : unique) {
    walks += (degree[e.u] - 1) * (degree[e.v] - 1);
    triangles += adj.common_above(e.u, e.v, e.v);
  }
  // Each triangle shows up as three closed 3-walks, one per edge.
  return walks - 3 * triangles;
}

bool has_cycle4(std::uint32_t n, std::span<const Edge> edges) {
  check_edges(n, edges);
  BitMatrix seen(n);
  std::vector<Edge> unique;
  for (const Edge& e : edges) {
    if (seen.set(e.u, e.v)) unique.push_back(e);
  }
  // Reiman: a C4-free graph has at most (n/4)(1 + sqrt(4n - 3)) edges.
  const double reiman = n / 4.0 * (1.0 + std::sqrt(4.0 * n - 3.0));
  if (static_cast<double>(unique.size()) > reiman) return true;

  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : unique) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // A 4-cycle exists iff some start s reaches a vertex w != s through two
  // different middle vertices.
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> seen_from(n, kNone);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex mid : adj[s]) {
      for (Vertex w : adj[mid]) {
        if (w == s) continue;
        if (seen_from[w] == s) return true;
        seen_from[w] = s;
      }
    }
  }
  return false;
}

}  // namespace cyclebuy
