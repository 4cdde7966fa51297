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

#ifndef LAMA_EXPANSION_HPP_
#define LAMA_EXPANSION_HPP_

#include <span>
#include <vector>

#include "lama/consensus.hpp"
#include "lama/local_view.hpp"
#include "lama/sparse.hpp"
#include "lama/types.hpp"

namespace lama {

// Initial affiliations by role.
inline constexpr double kCoreAffiliation = 1.0;
inline constexpr double kBoundaryAffiliation = 0.5;
inline constexpr double kShellAffiliation = 0.0;

// Mutable optimisation state of one detection run.
struct AffiliationState {
  LayerId seed_layer = 0;
  std::vector<bool> active;             // layers taking part in consensus
  std::vector<NodeVector> z;            // on each layer's visited nodes
  std::vector<double> delta;            // 0 for inactive layers
  NodeVector unified;                   // on the seed layer's visited nodes
  std::vector<SparseMatrix> strongest;  // P^{n->w} restricted to visited rows/cols
};

// z initialised to 1 / 0.5 / 0 on core / boundary / shell nodes.
NodeVector initial_affiliation(const LayerFrontier& frontier);

// P^{n->w} for every layer, restricted to rows visited in n and columns
// visited in w. Reads S only through `cache`.
std::vector<SparseMatrix> local_strongest(const MultiNetwork& net, const LocalView& view,
                                          LocalInterCache& cache, LayerId n);

// Mean of z over C^w u N^w. Throws when C^w u N^w is empty.
double z_norm(const LocalView& view, const NodeVector& z, LayerId w);

struct ExpansionStep {
  std::vector<NodeId> joined;          // nodes moved into C^w
  std::vector<NodeId> newly_visited;   // nodes that entered V^w_v

  bool changed() const { return !joined.empty(); }
};

// Moves every node of C^w u N^w with z > z_norm into C^w and recomputes N^w
// and NN^w.
ExpansionStep expand_core(LocalView& view, const NodeVector& z, LayerId w);

// Resizes the state after expansion: new boundary nodes get z = 0.5, new
// shell nodes z = 0, P is rebuilt from the extended local inter-layer
// matrices and U gains mean(U) for new seed-layer nodes.
void adjust_state(const MultiNetwork& net, const LocalView& view, LocalInterCache& cache,
                  const std::vector<std::vector<NodeId>>& newly_visited, AffiliationState& state);

struct FinalCommunities {
  LayerNodeSets communities;
  std::vector<NodeVector> blend;
};

// b = d^ z + (1 - d^) u~ with d^_w = delta_w / max delta, and the community
// of layer w is {i : b_i > mean(b)}. With `over_layer` the mean runs over
// every node of the layer, unvisited nodes counting as b = 0; otherwise over
// the visited nodes only. The seed is always kept in its layer.
FinalCommunities finalize_communities(const LocalView& view, const AffiliationState& state,
                                      NodeRef seed, bool over_layer = true);

}  // namespace lama

#endif  // LAMA_EXPANSION_HPP_
