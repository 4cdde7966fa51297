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

#ifndef LAMA_MULTINET_HPP_
#define LAMA_MULTINET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lama/types.hpp"

namespace lama {

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighted undirected simple graph in CSR form. Adjacency lists are sorted
// by neighbor id and symmetric by construction.
class LayerGraph {
 public:
  LayerGraph() = default;

  // Self-loops are dropped (one message appended to `warnings` when given).
  // Repeated pairs, in either orientation, collapse to one edge carrying the
  // largest weight. Throws on out-of-range endpoints or non-positive weights.
  static LayerGraph from_edges(std::size_t node_count, std::span<const Edge> edges,
                               std::vector<std::string>* warnings = nullptr);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  // Throws std::out_of_range("node out of range").
  std::span<const Neighbor> neighbors(NodeId node) const;

  // 0 when the edge is absent.
  double weight(NodeId u, NodeId v) const;

  // Every undirected edge once, with u < v, ascending.
  std::vector<Edge> edges() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
};

// One inter-layer edge as it appears in input files.
struct InterEdge {
  LayerId layer_a = 0;
  NodeId u = 0;
  LayerId layer_b = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const InterEdge&, const InterEdge&) = default;
};

// Sparse S^{source->target}; rows indexed by source-layer nodes.
class InterLayerEdges {
 public:
  InterLayerEdges() = default;
  InterLayerEdges(LayerId source, LayerId target, std::size_t source_nodes);

  LayerId source() const { return source_; }
  LayerId target() const { return target_; }
  std::size_t nnz() const { return nnz_; }

  // Non-zero entries of row i, ascending by target node.
  std::span<const Neighbor> row(NodeId i) const;

 private:
  friend class MultiNetwork;

  LayerId source_ = 0;
  LayerId target_ = 0;
  std::size_t nnz_ = 0;
  std::vector<std::vector<Neighbor>> rows_;
};

// Immutable collection of layers plus the inter-layer matrices S.
class MultiNetwork {
 public:
  MultiNetwork() = default;

  // Multi-view: S^{w->w'} is the identity, nothing is stored.
  static MultiNetwork multi_view(std::vector<LayerGraph> layers);

  // Multi-domain: weights outside [0, 1] are rescaled by the global maximum
  // inter-layer weight; zero weights are skipped; repeated pairs keep the max.
  // Negative weights, same-layer pairs and out-of-range ids throw.
  static MultiNetwork multi_domain(std::vector<LayerGraph> layers,
                                   std::span<const InterEdge> inter,
                                   std::vector<std::string>* warnings = nullptr);

  NetworkKind kind() const { return kind_; }
  std::size_t layer_count() const { return layers_.size(); }
  const LayerGraph& layer(LayerId w) const;
  const std::vector<LayerGraph>& layers() const { return layers_; }

  // Factor applied to raw inter-layer weights at ingestion (1 when none).
  double inter_weight_scale() const { return inter_scale_; }

  // True when S^{w->w'} has at least one non-zero (always true for multi-view
  // pairs of distinct layers).
  bool has_inter(LayerId w, LayerId w2) const;

  // Stored S^{w->w'}; nullptr for multi-view networks or empty pairs.
  const InterLayerEdges* inter(LayerId w, LayerId w2) const;

  // Non-zero S^{w->w'}_{i,*}. For multi-view networks this is {i: 1.0} when
  // i exists in w'. Throws std::out_of_range for i outside layer w.
  std::vector<Neighbor> interlayer_row(LayerId w, LayerId w2, NodeId i) const;

  // Every stored inter-layer edge once (layer_a < layer_b), after scaling.
  std::vector<InterEdge> inter_edges() const;

 private:
  NetworkKind kind_ = NetworkKind::multi_view;
  std::vector<LayerGraph> layers_;
  // Dense m x m table of matrices; index w * m + w'.
  std::vector<InterLayerEdges> inter_;
  double inter_scale_ = 1.0;
};

}  // namespace lama

#endif  // LAMA_MULTINET_HPP_
