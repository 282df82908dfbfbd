#pragma once

#include <cstdint>
#include <compare>

namespace cyclebuy {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// An undirected edge of K_n with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
};

// Orders an arbitrary vertex pair; throws std::invalid_argument if a == b.
Edge make_edge(Vertex a, Vertex b);

// N = n(n-1)/2. Throws if n is too large for 32-bit edge indices.
std::uint64_t edge_count(std::uint32_t n);

// Lexicographic rank of (u, v) among all pairs of [0, n).
// Throws std::invalid_argument unless 0 <= u < v < n.
EdgeIndex edge_index(Vertex u, Vertex v, std::uint32_t n);
inline EdgeIndex edge_index(Edge e, std::uint32_t n) { return edge_index(e.u, e.v, n); }

// Inverse of edge_index. Throws std::invalid_argument if index >= N.
Edge edge_of_index(EdgeIndex index, std::uint32_t n);

// Unchecked variants for hot loops; callers guarantee the preconditions.
constexpr EdgeIndex edge_index_unchecked(Vertex u, Vertex v, std::uint32_t n) {
  const std::uint64_t row_start =
      static_cast<std::uint64_t>(u) * (2ULL * n - u - 1) / 2;
  return static_cast<EdgeIndex>(row_start + (v - u - 1));
}
Edge edge_of_index_unchecked(EdgeIndex index, std::uint32_t n);

}  // namespace cyclebuy
