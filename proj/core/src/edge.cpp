#include "cyclebuy/edge.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cyclebuy {

namespace {

constexpr std::uint64_t row_start(std::uint64_t u, std::uint64_t n) {
  return u * (2 * n - u - 1) / 2;
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("make_edge: self-loop");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::uint64_t edge_count(std::uint32_t n) {
  const std::uint64_t N = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (N > std::numeric_limits<EdgeIndex>::max()) {
    throw std::invalid_argument("edge_count: n too large for 32-bit edge indices");
  }
  return N;
}

EdgeIndex edge_index(Vertex u, Vertex v, std::uint32_t n) {
  if (!(u < v && v < n)) {
    throw std::invalid_argument("edge_index: need 0 <= u < v < n, got (" +
                                std::to_string(u) + ", " + std::to_string(v) +
                                ", n=" + std::to_string(n) + ")");
  }
  return edge_index_unchecked(u, v, n);
}

Edge edge_of_index(EdgeIndex index, std::uint32_t n) {
  if (n < 2 || index >= edge_count(n)) {
    throw std::invalid_argument("edge_of_index: index " + std::to_string(index) +
                                " out of range for n=" + std::to_string(n));
  }
  return edge_of_index_unchecked(index, n);
}

Edge edge_of_index_unchecked(EdgeIndex index, std::uint32_t n) {
  // Rows shrink by one per vertex; count pairs from the end to get a
  // closed form: the tail after row u holds (n-1-u)(n-2-u)/2 pairs.
  const std::uint64_t N = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t back = N - 1 - index;
  auto r = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(back) + 1.0) - 1.0) / 2.0);
  while ((r + 1) * (r + 2) / 2 <= back) ++r;
  while (r * (r + 1) / 2 > back) --r;
  const std::uint64_t u = n - 2 - r;
  const std::uint64_t v = u + 1 + (index - row_start(u, n));
  return Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace cyclebuy
