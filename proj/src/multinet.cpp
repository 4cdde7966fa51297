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

#include "lama/multinet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace lama {

LayerGraph LayerGraph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                                  std::vector<std::string>* warnings) {
  std::map<std::pair<NodeId, NodeId>, double> unique;
  std::size_t self_loops = 0;
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::out_of_range("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") references a node out of range");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has non-positive weight");
    }
    if (e.u == e.v) {
      ++self_loops;
      continue;
    }
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = unique.emplace(std::pair{key.first, key.second}, e.weight);
    if (!inserted) it->second = std::max(it->second, e.weight);
  }
  if (self_loops > 0 && warnings != nullptr) {
    warnings->push_back("dropped " + std::to_string(self_loops) + " self-loop(s)");
  }

  LayerGraph g;
  g.node_count_ = node_count;
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& [key, _] : unique) {
    ++degree[key.first];
    ++degree[key.second];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.neighbors_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [key, w] : unique) {
    g.neighbors_[cursor[key.first]++] = Neighbor{key.second, w};
    g.neighbors_[cursor[key.second]++] = Neighbor{key.first, w};
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
  return g;
}

std::span<const Neighbor> LayerGraph::neighbors(NodeId node) const {
  if (node >= node_count_) throw std::out_of_range("node out of range");
  return std::span<const Neighbor>(neighbors_).subspan(offsets_[node],
                                                       offsets_[node + 1] - offsets_[node]);
}

double LayerGraph::weight(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, NodeId x) { return n.node < x; });
  return (it != adj.end() && it->node == v) ? it->weight : 0.0;
}

std::vector<Edge> LayerGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count_; ++u) {
    for (const Neighbor& n : neighbors(u)) {
      if (u < n.node) out.push_back(Edge{u, n.node, n.weight});
    }
  }
  return out;
}

InterLayerEdges::InterLayerEdges(LayerId source, LayerId target, std::size_t source_nodes)
    : source_(source), target_(target), rows_(source_nodes) {}

std::span<const Neighbor> InterLayerEdges::row(NodeId i) const {
  if (i >= rows_.size()) throw std::out_of_range("node out of range");
  return rows_[i];
}

MultiNetwork MultiNetwork::multi_view(std::vector<LayerGraph> layers) {
  if (layers.empty()) throw std::invalid_argument("a multi-network needs at least one layer");
  MultiNetwork net;
  net.kind_ = NetworkKind::multi_view;
  net.layers_ = std::move(layers);
  return net;
}

MultiNetwork MultiNetwork::multi_domain(std::vector<LayerGraph> layers,
                                        std::span<const InterEdge> inter,
                                        std::vector<std::string>* warnings) {
  if (layers.empty()) throw std::invalid_argument("a multi-network needs at least one layer");
  const std::size_t m = layers.size();
  MultiNetwork net;
  net.kind_ = NetworkKind::multi_domain;
  net.layers_ = std::move(layers);

  double max_weight = 0.0;
  bool out_of_unit = false;
  for (const InterEdge& e : inter) {
    if (e.layer_a >= m || e.layer_b >= m) {
      throw std::out_of_range("inter-layer edge references layer out of range");
    }
    if (e.layer_a == e.layer_b) {
      throw std::invalid_argument("inter-layer edge connects layer " + std::to_string(e.layer_a) +
                                  " to itself");
    }
    if (e.u >= net.layers_[e.layer_a].node_count() || e.v >= net.layers_[e.layer_b].node_count()) {
      throw std::out_of_range("inter-layer edge references a node out of range");
    }
    if (e.weight < 0.0 || !std::isfinite(e.weight)) {
      throw std::invalid_argument("inter-layer edge has negative or non-finite weight");
    }
    max_weight = std::max(max_weight, e.weight);
    if (e.weight > 1.0) out_of_unit = true;
  }
  net.inter_scale_ = out_of_unit ? 1.0 / max_weight : 1.0;
  if (out_of_unit && warnings != nullptr) {
    warnings->push_back("inter-layer weights rescaled by 1/" + std::to_string(max_weight));
  }

  // Collect both orientations, keeping the max per pair.
  std::map<std::pair<LayerId, LayerId>, std::map<std::pair<NodeId, NodeId>, double>> cells;
  for (const InterEdge& e : inter) {
    double w = e.weight * net.inter_scale_;
    if (w == 0.0) continue;
    double& fwd = cells[{e.layer_a, e.layer_b}][{e.u, e.v}];
    fwd = std::max(fwd, w);
    double& bwd = cells[{e.layer_b, e.layer_a}][{e.v, e.u}];
    bwd = std::max(bwd, w);
  }

  net.inter_.reserve(m * m);
  for (LayerId a = 0; a < m; ++a) {
    for (LayerId b = 0; b < m; ++b) {
      InterLayerEdges s(a, b, net.layers_[a].node_count());
      auto it = cells.find({a, b});
      if (it != cells.end()) {
        // std::map iteration is ordered by (row, col), so rows come out sorted.
        for (const auto& [key, w] : it->second) s.rows_[key.first].push_back(Neighbor{key.second, w});
        s.nnz_ = it->second.size();
      }
      net.inter_.push_back(std::move(s));
    }
  }
  return net;
}

const LayerGraph& MultiNetwork::layer(LayerId w) const {
  if (w >= layers_.size()) throw std::out_of_range("layer out of range");
  return layers_[w];
}

bool MultiNetwork::has_inter(LayerId w, LayerId w2) const {
  if (w >= layers_.size() || w2 >= layers_.size()) throw std::out_of_range("layer out of range");
  if (w == w2) return false;
  if (kind_ == NetworkKind::multi_view) return true;
  return inter_[w * layers_.size() + w2].nnz() > 0;
}

const InterLayerEdges* MultiNetwork::inter(LayerId w, LayerId w2) const {
  if (w >= layers_.size() || w2 >= layers_.size()) throw std::out_of_range("layer out of range");
  if (kind_ == NetworkKind::multi_view || w == w2) return nullptr;
  const InterLayerEdges& s = inter_[w * layers_.size() + w2];
  return s.nnz() > 0 ? &s : nullptr;
}

std::vector<Neighbor> MultiNetwork::interlayer_row(LayerId w, LayerId w2, NodeId i) const {
  if (i >= layer(w).node_count()) throw std::out_of_range("node out of range");
  if (kind_ == NetworkKind::multi_view) {
    if (i < layer(w2).node_count()) return {Neighbor{i, 1.0}};
    return {};
  }
  const InterLayerEdges* s = inter(w, w2);
  if (s == nullptr) return {};
  auto r = s->row(i);
  return {r.begin(), r.end()};
}

std::vector<InterEdge> MultiNetwork::inter_edges() const {
  std::vector<InterEdge> out;
  if (kind_ == NetworkKind::multi_view) return out;
  const std::size_t m = layers_.size();
  for (LayerId a = 0; a < m; ++a) {
    for (LayerId b = a + 1; b < m; ++b) {
      const InterLayerEdges& s = inter_[a * m + b];
      for (NodeId i = 0; i < s.rows_.size(); ++i) {
        for (const Neighbor& n : s.rows_[i]) out.push_back(InterEdge{a, i, b, n.node, n.weight});
      }
    }
  }
  return out;
}

}  // namespace lama
