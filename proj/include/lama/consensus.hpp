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

#ifndef LAMA_CONSENSUS_HPP_
#define LAMA_CONSENSUS_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "lama/local_view.hpp"
#include "lama/multinet.hpp"
#include "lama/sparse.hpp"
#include "lama/types.hpp"

namespace lama {

// Floor applied to ||U - P z||^2 before taking the square root in the layer
// weight update.
inline constexpr double kResidualFloor = 1e-6;

// m x m table of local inter-layer matrices S_l^{w->w'}.
class LocalInterSet {
 public:
  LocalInterSet() = default;
  explicit LocalInterSet(std::size_t layers) : layers_(layers), cells_(layers * layers) {}

  std::size_t layer_count() const { return layers_; }
  const SparseMatrix& at(LayerId w, LayerId w2) const { return cells_.at(w * layers_ + w2); }
  SparseMatrix& at(LayerId w, LayerId w2) { return cells_.at(w * layers_ + w2); }

 private:
  std::size_t layers_ = 0;
  std::vector<SparseMatrix> cells_;
};

// S_l^{w->w'}: the entries of S^{w->w'} in rows of nodes visited in w plus
// the entries in columns of nodes visited in w' (read through the rows of
// S^{w'->w}). No other rows of S are read. For multi-view networks this is
// the identity on the visited nodes of w.
SparseMatrix extract_local_inter(const MultiNetwork& net, const LocalView& view, LayerId w,
                                 LayerId w2);

// Same restriction as extract_local_inter, for every ordered layer pair,
// with explicit per-layer node sets standing in for the visited sets.
LocalInterSet local_inter_from(const MultiNetwork& net, const LayerNodeSets& nodes);

// Incrementally maintained S_l for a run: each call reads only the rows of
// nodes that became visited since the previous call.
class LocalInterCache {
 public:
  explicit LocalInterCache(std::size_t layers);

  void extend(const MultiNetwork& net, const LocalView& view);
  const LocalInterSet& locals() const { return locals_; }

  // Number of inter-layer rows read so far (all layer pairs).
  std::size_t rows_read() const { return rows_read_; }

 private:
  LocalInterSet locals_;
  std::vector<std::set<NodeId>> read_;
  std::size_t rows_read_ = 0;
};

struct StrongestPaths {
  // P^{n->w}, rows in the seed layer's node space, columns in layer w.
  std::vector<SparseMatrix> matrices;
  // False when no layer path from n reaches w through non-empty matrices.
  std::vector<bool> reachable;
};

// P^{n->w}_{ij} = max over simple layer paths n = a_0, ..., a_{k+1} = w of the
// (i, j) entry of S_l^{a_0->a_1} ... S_l^{a_k->a_{k+1}} (ordinary products,
// evaluated left to right), capped at 1. P^{n->n} is the identity on
// `seed_layer_nodes`.
StrongestPaths strongest_paths(const LocalInterSet& locals, LayerId n,
                               std::span<const NodeId> seed_layer_nodes);

// Multi-view short-circuit: P^{n->w} is the identity on the nodes visited in
// both n and w. S is never read.
StrongestPaths identity_paths(const LocalView& view, LayerId n);

// delta_w = 1 / (2 sqrt(max(d_w, floor))).
double layer_weight(double residual);

// Per-layer weights from the current U, z and P. Layers with active[w] false
// get 0 and are ignored everywhere else.
std::vector<double> update_weights(const NodeVector& unified, std::span<const NodeVector> z,
                                   std::span<const SparseMatrix> strongest,
                                   const std::vector<bool>& active);

// U_i = sum_w delta_w (P^{n->w} z^w)_i / sum_w delta_w on `domain`, clamped
// to [0, 1]. With `literal` the division by sum_w delta_w is skipped. Throws
// "degenerate weights" when no active layer has positive weight.
NodeVector update_unified(std::span<const NodeVector> z, std::span<const double> delta,
                          std::span<const SparseMatrix> strongest,
                          const std::vector<bool>& active, std::span<const NodeId> domain,
                          bool literal = false);

// u~_j = sum_i P_ij u_i / sum_i P_ij over column j of P, or 0 when column j is
// empty, for every j in `layer_nodes`.
NodeVector map_unified_to_layer(const NodeVector& unified, const SparseMatrix& strongest,
                                std::span<const NodeId> layer_nodes);

// sum_w sqrt(||U - P^{n->w} z^w||^2) over active layers.
double surrogate_objective(const NodeVector& unified, std::span<const NodeVector> z,
                           std::span<const SparseMatrix> strongest,
                           const std::vector<bool>& active);

}  // namespace lama

#endif  // LAMA_CONSENSUS_HPP_
