#pragma once

#include <cstdint>
#include <span>

#include "cyclebuy/edge.hpp"

namespace cyclebuy {

// Number of 3-edge paths (as unordered subgraphs) spanned by `edges`:
// sum over edges (d_u - 1)(d_v - 1) minus three per triangle.
// Duplicate edges are ignored. Runs in O(n^2/64 + m n/64).
std::uint64_t count_paths3(std::uint32_t n, std::span<const Edge> edges);

// Whether `edges` contain a cycle on four distinct vertices. Graphs above
// the Reiman edge bound answer immediately; otherwise stops at the first
// vertex reached twice by a 2-path from the same start.
bool has_cycle4(std::uint32_t n, std::span<const Edge> edges);

}  // namespace cyclebuy
