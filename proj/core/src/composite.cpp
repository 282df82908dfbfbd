#include "cyclebuy/composite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cyclebuy {

std::uint32_t choose_k(std::uint32_t n) {
  if (n < 30) throw std::invalid_argument("choose_k: n must be >= 30");
  const double dn = static_cast<double>(n);
  const auto stationary = static_cast<std::uint32_t>(std::floor(std::pow(6.25 * dn, 5.0 / 9.0) + 0.5));
  const auto lo = static_cast<std::uint32_t>(std::ceil(std::sqrt(dn)));
  return std::clamp(stationary, lo, n);
}

CompositeC4Strategy::CompositeC4Strategy(std::uint32_t n, EndRuleKind kind)
    : n_(n), kind_(kind), tree_(plan_tree_params(n, choose_k(n)), /*stop_when_done=*/false) {}

std::string_view CompositeC4Strategy::id() const {
  return kind_ == EndRuleKind::kSecretary ? "c4-composite" : "c4-composite-whp";
}

void CompositeC4Strategy::begin(const RunContext& ctx) {
  tree_.begin(ctx);
  revealed_.assign((ctx.edge_count + 63) / 64, 0);
  end_opened_ = false;
  end_.reset();
  rule_.reset();
  end_vertex_.assign(n_, 0);
  end_set_.clear();
}

Decision CompositeC4Strategy::on_reveal(const Reveal& reveal) {
  if (reveal.step < tree_.blue_phase_end()) {
    revealed_[reveal.index / 64] |= std::uint64_t{1} << (reveal.index % 64);
    return tree_.on_reveal(reveal);
  }
  if (tree_.fallback()) return Decision::kBuy;
  if (!end_opened_) open_end_phase();
  return on_end_reveal(reveal);
}

void CompositeC4Strategy::open_end_phase() {
  end_opened_ = true;
  const std::vector<Edge> tree = tree_.tree_edges();
  const std::vector<P3Path> paths = enumerate_purchased_p3(tree, tree_.params());
  EndState state;
  for (const P3Path& p : paths) {
    const Edge closing = p.endpoints();
    state.pairs.push_back(closing);
    const EdgeIndex idx = edge_index_unchecked(closing.u, closing.v, n_);
    if (!(revealed_[idx / 64] >> (idx % 64) & 1)) {
      state.end_edges.push_back(idx);
      end_set_.insert(idx);
      end_vertex_[closing.u] = 1;
      end_vertex_[closing.v] = 1;
    }
  }
  state.m = static_cast<std::uint32_t>(state.end_edges.size());
  if (state.m > 0) {
    if (kind_ == EndRuleKind::kSecretary) {
      rule_ = std::make_unique<SecretaryEndRule>(state.m);
    } else {
      rule_ = std::make_unique<WhpEndRule>(state.m, n_);
    }
  }
  end_ = std::move(state);
  revealed_.clear();
  revealed_.shrink_to_fit();
}

Decision CompositeC4Strategy::on_end_reveal(const Reveal& reveal) {
  if (!rule_ || rule_->exhausted()) return Decision::kSkip;
  const Edge e = reveal.edge();
  if (!end_vertex_[e.u] || !end_vertex_[e.v] || !end_set_.contains(reveal.index)) {
    return Decision::kSkip;
  }
  ++end_->examined;
  return rule_->offer(reveal.cost) ? Decision::kBuy : Decision::kSkip;
}

bool CompositeC4Strategy::wants_more() const {
  if (tree_.fallback()) return true;
  if (!end_opened_) return true;
  return rule_ && !rule_->exhausted();
}

void CompositeC4Strategy::finish(RunResult& result) const {
  tree_.finish(result);
  if (end_ && !tree_.fallback()) {
    result.end_size = end_->m;
    result.notes += " k=" + std::to_string(tree_.params().k) + " end=" + std::to_string(end_->m) +
                    " examined=" + std::to_string(end_->examined);
  }
}

}  // namespace cyclebuy
