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

#ifndef LAMA_OBJECTIVE_HPP_
#define LAMA_OBJECTIVE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lama/local_view.hpp"
#include "lama/sparse.hpp"
#include "lama/types.hpp"

namespace lama {

// Guard added to the internal (denominator) term of the quality ratio.
inline constexpr double kDenominatorGuard = 1e-12;

inline constexpr int kDefaultGridSize = 21;

struct EdgeTerms {
  double external = 0.0;
  double internal = 0.0;
};

// external = e|zi - zj|, internal = e([1 - |zi - zj|] + [max(zi, zj) - 1]),
// which equals e * min(zi, zj).
EdgeTerms edge_terms(double zi, double zj, double weight);

// Edges of one layer restricted to its visited nodes. Only adjacency lists of
// core and boundary nodes are read, so an edge is present when both endpoints
// are visited and at least one of them is in C u N.
class LayerSubgraph {
 public:
  struct LocalEdge {
    std::size_t a = 0;  // local index, a < b
    std::size_t b = 0;
    double weight = 0.0;
  };

  LayerSubgraph() = default;

  // With `shell_edges`, shell adjacencies are read as well so that edges
  // between two shell nodes are included.
  static LayerSubgraph build(LocalView& view, LayerId w, bool shell_edges = false);

  // Test / binding constructor. `nodes` need not be sorted; edges use node
  // ids and must reference listed nodes.
  static LayerSubgraph from_edges(std::vector<NodeId> nodes, std::span<const Edge> edges);

  std::span<const NodeId> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::optional<std::size_t> index_of(NodeId node) const;

  std::span<const LocalEdge> edges() const { return edges_; }
  // (other local index, weight) pairs.
  std::span<const std::pair<std::size_t, double>> incident(std::size_t local) const {
    return incident_[local];
  }

 private:
  void index_edges();

  std::vector<NodeId> nodes_;
  std::vector<LocalEdge> edges_;
  std::vector<std::vector<std::pair<std::size_t, double>>> incident_;
};

struct ObjectiveParts {
  double external = 0.0;
  double internal = 0.0;
  double ratio = 0.0;
  double regularization = 0.0;  // beta * ||z||^2
  double consensus = 0.0;       // weight * ||U - P z||^2

  double total() const { return ratio + regularization + consensus; }
};

// Consensus coupling of one layer to the unified affiliation. A null unified
// vector or a zero weight switches the term off.
struct ConsensusTerm {
  const NodeVector* unified = nullptr;
  const SparseMatrix* strongest = nullptr;  // rows: unified space, cols: layer
  double weight = 0.0;

  bool active() const { return unified != nullptr && strongest != nullptr && weight != 0.0; }
};

// external / (internal + guard); 0 when external is 0 (covers edgeless views).
double quality_ratio(double external, double internal);

// Sums run over unordered edge pairs of the subgraph. `z` must be defined
// exactly on the subgraph's nodes.
double layer_quality_ratio(const LayerSubgraph& sub, const NodeVector& z);

// ||U - P z||^2 over the unified space. Throws on dimension mismatch.
double consensus_residual(const NodeVector& unified, const SparseMatrix& strongest,
                          const NodeVector& z);

ObjectiveParts objective_parts(const LayerSubgraph& sub, const NodeVector& z,
                               const ConsensusTerm& consensus, double beta);

double layer_objective(const LayerSubgraph& sub, const NodeVector& z,
                       const ConsensusTerm& consensus, double beta);

// The grid {k / (grid_size - 1) : k = 0 .. grid_size - 1}.
std::vector<double> affiliation_grid(int grid_size = kDefaultGridSize);

// One coordinate pass in ascending node order. Every node not in `pinned`
// (sorted ascending) is set to the grid value minimising layer_objective with
// the other coordinates fixed; near-ties go to the smaller value. The
// incumbent is always a candidate, so the objective never increases.
NodeVector sweep_update_z(const LayerSubgraph& sub, const NodeVector& z,
                          const ConsensusTerm& consensus, double beta,
                          std::span<const NodeId> pinned,
                          int grid_size = kDefaultGridSize);

}  // namespace lama

#endif  // LAMA_OBJECTIVE_HPP_
