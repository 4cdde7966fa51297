// Copyright 2026 The LAMA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lama/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lama {

EdgeTerms edge_terms(double zi, double zj, double weight) {
  const double gap = std::abs(zi - zj);
  return EdgeTerms{weight * gap, weight * ((1.0 - gap) + (std::max(zi, zj) - 1.0))};
}

LayerSubgraph LayerSubgraph::build(LocalView& view, LayerId w, bool shell_edges) {
  const LayerFrontier& f = view.frontier(w);
  LayerSubgraph sub;
  sub.nodes_ = f.visited();
  const std::vector<NodeId> readable = shell_edges ? sub.nodes_ : f.core_and_boundary();
  for (NodeId x : readable) {
    const std::size_t a = *sub.index_of(x);
    for (const Neighbor& nb : view.neighbors(w, x)) {
      auto b = sub.index_of(nb.node);
      if (!b) continue;
      // Pairs with both ends read are seen twice; keep one orientation.
      auto other_role = f.role(nb.node);
      bool other_queried = shell_edges || other_role == Role::core || other_role == Role::boundary;
      if (other_queried && nb.node < x) continue;
      sub.edges_.push_back(LocalEdge{std::min(a, *b), std::max(a, *b), nb.weight});
    }
  }
  std::sort(sub.edges_.begin(), sub.edges_.end(), [](const LocalEdge& l, const LocalEdge& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  sub.index_edges();
  return sub;
}

LayerSubgraph LayerSubgraph::from_edges(std::vector<NodeId> nodes, std::span<const Edge> edges) {
  LayerSubgraph sub;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  sub.nodes_ = std::move(nodes);
  for (const Edge& e : edges) {
    auto a = sub.index_of(e.u);
    auto b = sub.index_of(e.v);
    if (!a || !b) throw std::invalid_argument("LayerSubgraph: edge endpoint not among nodes");
    if (*a == *b) continue;
    sub.edges_.push_back(LocalEdge{std::min(*a, *b), std::max(*a, *b), e.weight});
  }
  std::sort(sub.edges_.begin(), sub.edges_.end(), [](const LocalEdge& l, const LocalEdge& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  sub.index_edges();
  return sub;
}

std::optional<std::size_t> LayerSubgraph::index_of(NodeId node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

void LayerSubgraph::index_edges() {
  incident_.assign(nodes_.size(), {});
  for (const LocalEdge& e : edges_) {
    incident_[e.a].emplace_back(e.b, e.weight);
    incident_[e.b].emplace_back(e.a, e.weight);
  }
}

double quality_ratio(double external, double internal) {
  if (external == 0.0) return 0.0;
  return external / (internal + kDenominatorGuard);
}

namespace {

void require_aligned(const LayerSubgraph& sub, const NodeVector& z) {
  auto nodes = sub.nodes();
  auto ids = z.ids();
  if (!std::equal(nodes.begin(), nodes.end(), ids.begin(), ids.end())) {
    throw std::invalid_argument("dimension mismatch: affiliation vector does not match visited nodes");
  }
}

EdgeTerms totals(const LayerSubgraph& sub, std::span<const double> z) {
  EdgeTerms sum;
  for (const auto& e : sub.edges()) {
    EdgeTerms t = edge_terms(z[e.a], z[e.b], e.weight);
    sum.external += t.external;
    sum.internal += t.internal;
  }
  return sum;
}

}  // namespace

double layer_quality_ratio(const LayerSubgraph& sub, const NodeVector& z) {
  require_aligned(sub, z);
  EdgeTerms t = totals(sub, z.values());
  return quality_ratio(t.external, t.internal);
}

double consensus_residual(const NodeVector& unified, const SparseMatrix& strongest,
                          const NodeVector& z) {
  for (const auto& [i, row] : strongest.rows()) {
    if (!unified.contains(i)) {
      throw std::invalid_argument("dimension mismatch: strongest matrix row " + std::to_string(i) +
                                  " outside the unified space");
    }
    for (const auto& [j, _] : row) {
      if (!z.contains(j)) {
        throw std::invalid_argument("dimension mismatch: strongest matrix column " +
                                    std::to_string(j) + " outside the layer's visited nodes");
      }
    }
  }
  double total = 0.0;
  auto ids = unified.ids();
  auto vals = unified.values();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    double projected = 0.0;
    for (const auto& [j, p] : strongest.row(ids[k])) projected += p * z.at(j);
    const double r = vals[k] - projected;
    total += r * r;
  }
  return total;
}

ObjectiveParts objective_parts(const LayerSubgraph& sub, const NodeVector& z,
                               const ConsensusTerm& consensus, double beta) {
  require_aligned(sub, z);
  ObjectiveParts parts;
  EdgeTerms t = totals(sub, z.values());
  parts.external = t.external;
  parts.internal = t.internal;
  parts.ratio = quality_ratio(t.external, t.internal);
  parts.regularization = beta * z.squared_norm();
  if (consensus.active()) {
    parts.consensus =
        consensus.weight * consensus_residual(*consensus.unified, *consensus.strongest, z);
  }
  return parts;
}

double layer_objective(const LayerSubgraph& sub, const NodeVector& z,
                       const ConsensusTerm& consensus, double beta) {
  return objective_parts(sub, z, consensus, beta).total();
}

std::vector<double> affiliation_grid(int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid size must be at least 2");
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) {
    grid[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(grid_size - 1);
  }
  return grid;
}

NodeVector sweep_update_z(const LayerSubgraph& sub, const NodeVector& z,
                          const ConsensusTerm& consensus, double beta,
                          std::span<const NodeId> pinned, int grid_size) {
  require_aligned(sub, z);
  const std::vector<double> grid = affiliation_grid(grid_size);
  NodeVector out = z;
  std::span<double> zl = out.values();
  const std::size_t k = sub.size();

  EdgeTerms tot = totals(sub, zl);
  double sq = out.squared_norm();

  // Residuals of the consensus term, indexed like the unified vector, and the
  // columns of P translated to those indices.
  std::vector<double> residual;
  std::vector<std::vector<std::pair<std::size_t, double>>> column(k);
  double res_sq = 0.0;
  if (consensus.active()) {
    const NodeVector& u = *consensus.unified;
    // Validates dimensions as a side effect.
    res_sq = consensus_residual(u, *consensus.strongest, out);
    residual.assign(u.values().begin(), u.values().end());
    for (const auto& [i, row] : consensus.strongest->rows()) {
      const std::size_t ui = *u.index_of(i);
      for (const auto& [j, p] : row) {
        const std::size_t lj = *sub.index_of(j);
        column[lj].emplace_back(ui, p);
        residual[ui] -= p * zl[lj];
      }
    }
  }

  auto nodes = sub.nodes();
  for (std::size_t a = 0; a < k; ++a) {
    if (std::binary_search(pinned.begin(), pinned.end(), nodes[a])) continue;
    const double current = zl[a];

    double ext_rest = tot.external;
    double int_rest = tot.internal;
    for (const auto& [b, w] : sub.incident(a)) {
      EdgeTerms t = edge_terms(current, zl[b], w);
      ext_rest -= t.external;
      int_rest -= t.internal;
    }
    const double sq_rest = sq - current * current;
    double col_sq = 0.0;
    for (const auto& [ui, p] : column[a]) col_sq += residual[ui] * residual[ui];

    double best_value = current;
    double best_obj = std::numeric_limits<double>::infinity();
    EdgeTerms best_terms;
    for (double c : grid) {
      EdgeTerms inc;
      for (const auto& [b, w] : sub.incident(a)) {
        EdgeTerms t = edge_terms(c, zl[b], w);
        inc.external += t.external;
        inc.internal += t.internal;
      }
      double obj = quality_ratio(ext_rest + inc.external, int_rest + inc.internal) +
                   beta * (sq_rest + c * c);
      if (consensus.active()) {
        double cons = res_sq - col_sq;
        for (const auto& [ui, p] : column[a]) {
          const double r = residual[ui] + p * (current - c);
          cons += r * r;
        }
        obj += consensus.weight * cons;
      }
      const bool first = !std::isfinite(best_obj);
      if (first || obj < best_obj - 1e-12 * std::max(1.0, std::abs(best_obj))) {
        best_obj = obj;
        best_value = c;
        best_terms = inc;
      }
    }

    if (best_value != current) {
      tot.external = ext_rest + best_terms.external;
      tot.internal = int_rest + best_terms.internal;
      sq = sq_rest + best_value * best_value;
      for (const auto& [ui, p] : column[a]) {
        const double before = residual[ui];
        residual[ui] += p * (current - best_value);
        res_sq += residual[ui] * residual[ui] - before * before;
      }
      zl[a] = best_value;
    }
  }
  return out;
}

}  // namespace lama
