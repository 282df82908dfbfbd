#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cyclebuy/edge.hpp"
#include "cyclebuy/streams.hpp"

namespace cyclebuy {

// Parameters of the depth-2 tree rooted at vertex 0: n1 "red" edges at the
// root, then n2 "blue" edges hanging off the red leaves, which spans
// n2 * (n1 - 1) paths of length three.
struct TreeParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  double red_threshold = 0.0;   // min(4 n1 / n, 1)
  double blue_threshold = 0.0;  // min(4 n2 / (n1 n), 1)
};

// n1 = max(2, round((3k^2/2)^(1/5))), n2 = ceil(k / (n1 - 1)).
// Throws std::invalid_argument if k < 1, n < 4, or n1 does not fit in K_n.
TreeParams plan_tree_params(std::uint32_t n, std::uint32_t k);

// Path p[0]-p[1]-p[2]-p[3] with four distinct vertices.
struct P3Path {
  std::array<Vertex, 4> vertices{};

  Edge endpoints() const { return make_edge(vertices[0], vertices[3]); }
  std::array<Edge, 3> edges() const {
    return {make_edge(vertices[0], vertices[1]), make_edge(vertices[1], vertices[2]),
            make_edge(vertices[2], vertices[3])};
  }
  friend bool operator==(const P3Path&, const P3Path&) = default;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical paths (blue leaf, red leaf, 0, other red leaf) of a purchased
// depth-2 tree, ordered by (blue edge index, other red edge index) and cut
// to the first params.k. Throws StructuralError if `purchased` is not such
// a tree.
std::vector<P3Path> enumerate_purchased_p3(std::span<const Edge> purchased,
                                           const TreeParams& params);

// Online tree builder for the first two thirds of the stream.
//   reveals [0, N/3):      buy vertex-0 edges costing <= red_threshold
//   reveals [N/3, 2N/3):   buy edges with exactly one red-leaf endpoint and a
//                          fresh outer endpoint costing <= blue_threshold
// When a quota can no longer be met it switches to buying every later edge.
class TreeStrategy final : public OnlineStrategy {
 public:
  // With stop_when_done, inspection ends once both quotas are met.
  explicit TreeStrategy(TreeParams params, bool stop_when_done = true);

  std::string_view id() const override { return "tree-p3"; }
  void begin(const RunContext& ctx) override;
  Decision on_reveal(const Reveal& reveal) override;
  bool wants_more() const override { return fallback_ || !stop_when_done_ || !done(); }
  void finish(RunResult& result) const override;

  const TreeParams& params() const { return params_; }
  bool done() const { return red_.size() == params_.n1 && blue_.size() == params_.n2; }
  bool fallback() const { return fallback_; }
  std::uint64_t red_phase_end() const { return red_end_; }
  std::uint64_t blue_phase_end() const { return blue_end_; }
  // Purchased tree edges (excludes anything bought in fallback mode).
  std::vector<Edge> tree_edges() const;

 private:
  Decision on_red(const Reveal& reveal);
  Decision on_blue(const Reveal& reveal);

  TreeParams params_;
  bool stop_when_done_;
  std::uint64_t red_end_ = 0;
  std::uint64_t blue_end_ = 0;
  std::uint32_t root_edges_unrevealed_ = 0;
  std::vector<std::uint8_t> is_red_leaf_;
  std::vector<std::uint8_t> is_outer_;
  std::vector<Edge> red_;
  std::vector<Edge> blue_;
  bool fallback_ = false;
};

}  // namespace cyclebuy
