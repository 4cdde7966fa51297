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

#ifndef LAMA_LOCAL_VIEW_HPP_
#define LAMA_LOCAL_VIEW_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "lama/multinet.hpp"
#include "lama/types.hpp"

namespace lama {

enum class Role { core, boundary, shell };

// Visited bookkeeping for one layer: core C, boundary N = N(C) \ C and
// shell NN = N(C u N) \ (C u N).
class LayerFrontier {
 public:
  const std::set<NodeId>& core() const { return core_; }
  const std::set<NodeId>& boundary() const { return boundary_; }
  const std::set<NodeId>& shell() const { return shell_; }

  std::optional<Role> role(NodeId node) const;
  bool is_visited(NodeId node) const { return role(node).has_value(); }
  std::size_t visited_count() const { return core_.size() + boundary_.size() + shell_.size(); }

  // C u N u NN, ascending.
  std::vector<NodeId> visited() const;
  // C u N, ascending.
  std::vector<NodeId> core_and_boundary() const;

  // Distinct nodes whose adjacency has been read.
  std::size_t access_count() const { return queried_.size(); }
  bool was_queried(NodeId node) const { return queried_.contains(node); }

 private:
  friend class LocalView;

  std::set<NodeId> core_;
  std::set<NodeId> boundary_;
  std::set<NodeId> shell_;
  std::unordered_set<NodeId> queried_;
};

// Locality-enforcing access layer over a MultiNetwork. All adjacency reads
// made during a detection run go through `neighbors`, which tracks how many
// distinct nodes were queried per layer. Per-run state; not shared.
class LocalView {
 public:
  explicit LocalView(const MultiNetwork& net);

  const MultiNetwork& network() const { return *net_; }
  std::size_t layer_count() const { return frontiers_.size(); }

  // Counted adjacency access.
  std::span<const Neighbor> neighbors(LayerId w, NodeId node);

  const LayerFrontier& frontier(LayerId w) const;

  // Sets C^w = seeds and derives N^w and NN^w. Throws when a seed is out of
  // range or the layer already holds a core.
  void seed_layer(LayerId w, std::span<const NodeId> seeds);

  // Moves `nodes` (all visited in layer w) into C^w and recomputes the
  // frontiers. Returns the nodes that became visited as a result, ascending.
  std::vector<NodeId> grow_core(LayerId w, std::span<const NodeId> nodes);

 private:
  void rebuild_frontiers(LayerId w);

  const MultiNetwork* net_;
  std::vector<LayerFrontier> frontiers_;
};

// C^w = seeds for every layer with a non-empty seed set; other layers stay
// unvisited.
LocalView init_frontiers(const MultiNetwork& net, const LayerNodeSets& seeds_per_layer);

}  // namespace lama

#endif  // LAMA_LOCAL_VIEW_HPP_
