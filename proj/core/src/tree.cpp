#include "cyclebuy/tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cyclebuy {

TreeParams plan_tree_params(std::uint32_t n, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("plan_tree_params: k must be >= 1");
  if (n < 4) throw std::invalid_argument("plan_tree_params: n must be >= 4");
  const double kk = static_cast<double>(k);
  const auto rounded = static_cast<std::uint32_t>(std::floor(std::pow(1.5 * kk * kk, 0.2) + 0.5));
  TreeParams p;
  p.n = n;
  p.k = k;
  p.n1 = std::max<std::uint32_t>(2, rounded);
  if (p.n1 >= n - 1) {
    throw std::invalid_argument("plan_tree_params: n1=" + std::to_string(p.n1) +
                                " leaves no room for depth-2 vertices at n=" + std::to_string(n));
  }
  p.n2 = (k + p.n1 - 2) / (p.n1 - 1);
  const double dn = static_cast<double>(n);
  p.red_threshold = std::min(4.0 * p.n1 / dn, 1.0);
  p.blue_threshold = std::min(4.0 * p.n2 / (static_cast<double>(p.n1) * dn), 1.0);
  return p;
}

std::vector<P3Path> enumerate_purchased_p3(std::span<const Edge> purchased,
                                           const TreeParams& params) {
  std::vector<Edge> red;
  std::vector<Edge> blue;
  for (const Edge& e : purchased) (e.touches(0) ? red : blue).push_back(e);
  const auto by_index = [n = params.n](const Edge& a, const Edge& b) {
    return edge_index_unchecked(a.u, a.v, n) < edge_index_unchecked(b.u, b.v, n);
  };
  std::sort(red.begin(), red.end(), by_index);
  std::sort(blue.begin(), blue.end(), by_index);
  if (std::adjacent_find(red.begin(), red.end()) != red.end() ||
      std::adjacent_find(blue.begin(), blue.end()) != blue.end()) {
    throw StructuralError("enumerate_purchased_p3: duplicate edge");
  }

  std::vector<std::uint8_t> is_leaf(params.n, 0);
  for (const Edge& e : red) is_leaf[e.v] = 1;
  std::vector<std::uint8_t> outer_used(params.n, 0);
  struct Hang {
    Vertex leaf;
    Vertex outer;
  };
  std::vector<Hang> hangs;
  hangs.reserve(blue.size());
  for (const Edge& e : blue) {
    if (is_leaf[e.u] == is_leaf[e.v]) {
      throw StructuralError("enumerate_purchased_p3: edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " is not attached to exactly one red leaf");
    }
    const Vertex leaf = is_leaf[e.u] ? e.u : e.v;
    const Vertex outer = e.other(leaf);
    if (outer_used[outer]) {
      throw StructuralError("enumerate_purchased_p3: depth-2 vertex " + std::to_string(outer) +
                            " has two parents");
    }
    outer_used[outer] = 1;
    hangs.push_back({leaf, outer});
  }

  std::vector<P3Path> paths;
  for (const Hang& h : hangs) {
    for (const Edge& r : red) {
      if (paths.size() == params.k) return paths;
      if (r.v == h.leaf) continue;
      paths.push_back(P3Path{{h.outer, h.leaf, 0, r.v}});
    }
  }
  return paths;
}

TreeStrategy::TreeStrategy(TreeParams params, bool stop_when_done)
    : params_(params), stop_when_done_(stop_when_done) {
  if (params_.n1 < 2 || params_.n2 < 1 || params_.n < 4) {
    throw std::invalid_argument("TreeStrategy: invalid parameters");
  }
}

void TreeStrategy::begin(const RunContext& ctx) {
  if (ctx.n != params_.n) throw std::invalid_argument("TreeStrategy: n mismatch");
  red_end_ = ctx.edge_count / 3;
  blue_end_ = 2 * ctx.edge_count / 3;
  root_edges_unrevealed_ = ctx.n - 1;
  is_red_leaf_.assign(ctx.n, 0);
  is_outer_.assign(ctx.n, 0);
  red_.clear();
  blue_.clear();
  fallback_ = false;
}

Decision TreeStrategy::on_reveal(const Reveal& reveal) {
  if (fallback_) return Decision::kBuy;
  if (reveal.step < red_end_) return on_red(reveal);
  if (reveal.step < blue_end_) return on_blue(reveal);
  return Decision::kSkip;
}

Decision TreeStrategy::on_red(const Reveal& reveal) {
  Decision d = Decision::kSkip;
  // Vertex-0 edges occupy indices [0, n-1).
  if (reveal.index < params_.n - 1) {
    --root_edges_unrevealed_;
    if (red_.size() < params_.n1 && reveal.cost <= params_.red_threshold) {
      const Vertex leaf = reveal.index + 1;
      red_.push_back({0, leaf});
      is_red_leaf_[leaf] = 1;
      d = Decision::kBuy;
    }
  }
  const std::uint64_t need = params_.n1 - red_.size();
  const std::uint64_t slots = red_end_ - reveal.step - 1;
  if (need > 0 && std::min<std::uint64_t>(slots, root_edges_unrevealed_) < need) fallback_ = true;
  return d;
}

Decision TreeStrategy::on_blue(const Reveal& reveal) {
  Decision d = Decision::kSkip;
  if (blue_.size() < params_.n2 && reveal.cost <= params_.blue_threshold) {
    const Edge e = reveal.edge();
    if (!e.touches(0) && is_red_leaf_[e.u] != is_red_leaf_[e.v]) {
      const Vertex outer = is_red_leaf_[e.u] ? e.v : e.u;
      if (!is_outer_[outer]) {
        is_outer_[outer] = 1;
        blue_.push_back(e);
        d = Decision::kBuy;
      }
    }
  }
  const std::uint64_t need = params_.n2 - blue_.size();
  const std::uint64_t slots = blue_end_ - reveal.step - 1;
  const std::uint64_t fresh_outer = params_.n - 1 - red_.size() - blue_.size();
  if (need > 0 && std::min(slots, fresh_outer) < need) fallback_ = true;
  return d;
}

void TreeStrategy::finish(RunResult& result) const {
  result.fallback_triggered = fallback_;
  result.notes += "n1=" + std::to_string(params_.n1) + " n2=" + std::to_string(params_.n2) +
                  " red=" + std::to_string(red_.size()) + " blue=" + std::to_string(blue_.size());
}

std::vector<Edge> TreeStrategy::tree_edges() const {
  std::vector<Edge> edges(red_);
  edges.insert(edges.end(), blue_.begin(), blue_.end());
  return edges;
}

}  // namespace cyclebuy
