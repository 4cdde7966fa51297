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

#include "lama/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lama/objective.hpp"

namespace lama {

SparseMatrix extract_local_inter(const MultiNetwork& net, const LocalView& view, LayerId w,
                                 LayerId w2) {
  const LayerFrontier& source = view.frontier(w);
  if (net.kind() == NetworkKind::multi_view) {
    std::vector<NodeId> ids;
    for (NodeId i : source.visited()) {
      if (i < net.layer(w2).node_count()) ids.push_back(i);
    }
    return SparseMatrix::identity(ids);
  }
  SparseMatrix out;
  if (w == w2) return out;
  const InterLayerEdges* fwd = net.inter(w, w2);
  const InterLayerEdges* bwd = net.inter(w2, w);
  if (fwd == nullptr) return out;
  for (NodeId i : source.visited()) {
    for (const Neighbor& e : fwd->row(i)) out.set(i, e.node, e.weight);
  }
  for (NodeId j : view.frontier(w2).visited()) {
    for (const Neighbor& e : bwd->row(j)) out.set(e.node, j, e.weight);
  }
  return out;
}

LocalInterSet local_inter_from(const MultiNetwork& net, const LayerNodeSets& nodes) {
  const std::size_t m = net.layer_count();
  if (nodes.size() != m) throw std::invalid_argument("node sets must be given for every layer");
  LocalInterSet out(m);
  for (LayerId w = 0; w < m; ++w) {
    for (NodeId i : nodes[w]) {
      for (LayerId w2 = 0; w2 < m; ++w2) {
        if (w == w2) continue;
        for (const Neighbor& e : net.interlayer_row(w, w2, i)) {
          out.at(w, w2).set(i, e.node, e.weight);
          out.at(w2, w).set(e.node, i, e.weight);
        }
      }
    }
  }
  return out;
}

LocalInterCache::LocalInterCache(std::size_t layers) : locals_(layers), read_(layers) {}

void LocalInterCache::extend(const MultiNetwork& net, const LocalView& view) {
  const std::size_t m = net.layer_count();
  if (net.kind() == NetworkKind::multi_view) {
    for (LayerId w = 0; w < m; ++w) {
      for (LayerId w2 = 0; w2 < m; ++w2) {
        if (w != w2) locals_.at(w, w2) = extract_local_inter(net, view, w, w2);
      }
    }
    return;
  }
  for (LayerId w = 0; w < m; ++w) {
    for (NodeId i : view.frontier(w).visited()) {
      if (!read_[w].insert(i).second) continue;
      for (LayerId w2 = 0; w2 < m; ++w2) {
        const InterLayerEdges* s = net.inter(w, w2);
        if (s == nullptr) continue;
        ++rows_read_;
        for (const Neighbor& e : s->row(i)) {
          // Row i of S^{w->w'} and, by symmetry of storage, column i of
          // S^{w'->w}.
          locals_.at(w, w2).set(i, e.node, e.weight);
          locals_.at(w2, w).set(e.node, i, e.weight);
        }
      }
    }
  }
}

namespace {

void extend_paths(const LocalInterSet& locals, LayerId current, const SparseMatrix& product,
                  std::vector<bool>& on_path, std::vector<SparseMatrix>& best) {
  const std::size_t m = locals.layer_count();
  for (LayerId next = 0; next < m; ++next) {
    if (on_path[next]) continue;
    const SparseMatrix& hop = locals.at(current, next);
    if (hop.empty()) continue;
    SparseMatrix extended = multiply(product, hop);
    if (extended.empty()) continue;
    best[next].max_with(extended);
    on_path[next] = true;
    extend_paths(locals, next, extended, on_path, best);
    on_path[next] = false;
  }
}

}  // namespace

StrongestPaths strongest_paths(const LocalInterSet& locals, LayerId n,
                               std::span<const NodeId> seed_layer_nodes) {
  const std::size_t m = locals.layer_count();
  if (n >= m) throw std::out_of_range("layer out of range");
  StrongestPaths out;
  out.matrices.resize(m);
  std::vector<bool> on_path(m, false);
  on_path[n] = true;
  for (LayerId first = 0; first < m; ++first) {
    if (on_path[first]) continue;
    const SparseMatrix& hop = locals.at(n, first);
    if (hop.empty()) continue;
    out.matrices[first].max_with(hop);
    on_path[first] = true;
    extend_paths(locals, first, hop, on_path, out.matrices);
    on_path[first] = false;
  }
  out.reachable.assign(m, false);
  for (LayerId w = 0; w < m; ++w) {
    out.matrices[w].clamp_above(1.0);
    out.reachable[w] = !out.matrices[w].empty();
  }
  out.matrices[n] = SparseMatrix::identity(seed_layer_nodes);
  out.reachable[n] = true;
  return out;
}

StrongestPaths identity_paths(const LocalView& view, LayerId n) {
  const std::size_t m = view.layer_count();
  StrongestPaths out;
  out.matrices.resize(m);
  out.reachable.assign(m, true);
  const std::vector<NodeId> seed_nodes = view.frontier(n).visited();
  for (LayerId w = 0; w < m; ++w) {
    std::vector<NodeId> shared;
    const std::vector<NodeId> layer_nodes = view.frontier(w).visited();
    std::set_intersection(seed_nodes.begin(), seed_nodes.end(), layer_nodes.begin(),
                          layer_nodes.end(), std::back_inserter(shared));
    out.matrices[w] = SparseMatrix::identity(shared);
  }
  return out;
}

double layer_weight(double residual) {
  return 1.0 / (2.0 * std::sqrt(std::max(residual, kResidualFloor)));
}

std::vector<double> update_weights(const NodeVector& unified, std::span<const NodeVector> z,
                                   std::span<const SparseMatrix> strongest,
                                   const std::vector<bool>& active) {
  if (z.size() != strongest.size() || z.size() != active.size()) {
    throw std::invalid_argument("dimension mismatch: per-layer inputs differ in length");
  }
  std::vector<double> delta(z.size(), 0.0);
  for (std::size_t w = 0; w < z.size(); ++w) {
    if (!active[w]) continue;
    delta[w] = layer_weight(consensus_residual(unified, strongest[w], z[w]));
  }
  return delta;
}

NodeVector update_unified(std::span<const NodeVector> z, std::span<const double> delta,
                          std::span<const SparseMatrix> strongest,
                          const std::vector<bool>& active, std::span<const NodeId> domain,
                          bool literal) {
  if (z.size() != strongest.size() || z.size() != active.size() || z.size() != delta.size()) {
    throw std::invalid_argument("dimension mismatch: per-layer inputs differ in length");
  }
  double weight_sum = 0.0;
  for (std::size_t w = 0; w < z.size(); ++w) {
    if (!active[w]) continue;
    if (delta[w] < 0.0 || !std::isfinite(delta[w])) {
      throw std::invalid_argument("layer weights must be finite and non-negative");
    }
    weight_sum += delta[w];
  }
  if (!(weight_sum > 0.0)) throw Error("degenerate weights");

  std::vector<NodeId> ids(domain.begin(), domain.end());
  std::vector<double> values(ids.size(), 0.0);
  for (std::size_t w = 0; w < z.size(); ++w) {
    if (!active[w]) continue;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      double projected = 0.0;
      for (const auto& [j, p] : strongest[w].row(ids[k])) {
        auto idx = z[w].index_of(j);
        if (!idx) {
          throw std::invalid_argument("dimension mismatch: strongest matrix column outside z");
        }
        projected += p * z[w].values()[*idx];
      }
      values[k] += delta[w] * projected;
    }
  }
  for (double& v : values) {
    if (!literal) v /= weight_sum;
    v = std::clamp(v, 0.0, 1.0);
  }
  return NodeVector(std::move(ids), std::move(values));
}

NodeVector map_unified_to_layer(const NodeVector& unified, const SparseMatrix& strongest,
                                std::span<const NodeId> layer_nodes) {
  std::vector<double> num(layer_nodes.size(), 0.0);
  std::vector<double> den(layer_nodes.size(), 0.0);
  auto position = [&](NodeId j) -> std::ptrdiff_t {
    auto it = std::lower_bound(layer_nodes.begin(), layer_nodes.end(), j);
    if (it == layer_nodes.end() || *it != j) return -1;
    return it - layer_nodes.begin();
  };
  for (const auto& [i, row] : strongest.rows()) {
    const double u = unified.value_or(i, 0.0);
    for (const auto& [j, p] : row) {
      const std::ptrdiff_t k = position(j);
      if (k < 0) continue;
      num[static_cast<std::size_t>(k)] += p * u;
      den[static_cast<std::size_t>(k)] += p;
    }
  }
  std::vector<double> values(layer_nodes.size(), 0.0);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (den[k] > 0.0) values[k] = num[k] / den[k];
  }
  return NodeVector(std::vector<NodeId>(layer_nodes.begin(), layer_nodes.end()),
                    std::move(values));
}

double surrogate_objective(const NodeVector& unified, std::span<const NodeVector> z,
                           std::span<const SparseMatrix> strongest,
                           const std::vector<bool>& active) {
  double total = 0.0;
  for (std::size_t w = 0; w < z.size(); ++w) {
    if (active[w]) total += std::sqrt(consensus_residual(unified, strongest[w], z[w]));
  }
  return total;
}

}  // namespace lama
