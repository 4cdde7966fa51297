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

#include "lama/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace lama {

NodeVector initial_affiliation(const LayerFrontier& frontier) {
  NodeVector z(frontier.visited(), kShellAffiliation);
  for (NodeId v : frontier.core()) z.set(v, kCoreAffiliation);
  for (NodeId v : frontier.boundary()) z.set(v, kBoundaryAffiliation);
  return z;
}

std::vector<SparseMatrix> local_strongest(const MultiNetwork& net, const LocalView& view,
                                          LocalInterCache& cache, LayerId n) {
  StrongestPaths paths;
  if (net.kind() == NetworkKind::multi_view) {
    paths = identity_paths(view, n);
  } else {
    cache.extend(net, view);
    paths = strongest_paths(cache.locals(), n, view.frontier(n).visited());
  }
  const std::vector<NodeId> rows = view.frontier(n).visited();
  std::vector<SparseMatrix> out(net.layer_count());
  for (LayerId w = 0; w < net.layer_count(); ++w) {
    out[w] = paths.matrices[w].restricted(rows, view.frontier(w).visited());
  }
  return out;
}

double z_norm(const LocalView& view, const NodeVector& z, LayerId w) {
  const std::vector<NodeId> members = view.frontier(w).core_and_boundary();
  if (members.empty()) throw Error("z_norm: core and boundary of layer are empty");
  double total = 0.0;
  for (NodeId v : members) total += z.at(v);
  return total / static_cast<double>(members.size());
}

ExpansionStep expand_core(LocalView& view, const NodeVector& z, LayerId w) {
  const double threshold = z_norm(view, z, w);
  ExpansionStep step;
  for (NodeId v : view.frontier(w).boundary()) {
    if (z.at(v) > threshold) step.joined.push_back(v);
  }
  // Core nodes above the threshold are already in C; only boundary nodes move.
  if (step.joined.empty()) return step;
  step.newly_visited = view.grow_core(w, step.joined);
  return step;
}

void adjust_state(const MultiNetwork& net, const LocalView& view, LocalInterCache& cache,
                  const std::vector<std::vector<NodeId>>& newly_visited, AffiliationState& state) {
  const std::size_t m = net.layer_count();
  bool any = false;
  for (LayerId w = 0; w < m; ++w) {
    if (newly_visited[w].empty()) continue;
    any = true;
    const LayerFrontier& f = view.frontier(w);
    for (NodeId v : newly_visited[w]) {
      state.z[w].set(v, f.role(v) == Role::boundary ? kBoundaryAffiliation : kShellAffiliation);
    }
  }
  if (!any) return;

  const LayerId n = state.seed_layer;
  if (!newly_visited[n].empty()) {
    const double fill = state.unified.mean();
    for (NodeId v : newly_visited[n]) state.unified.set(v, fill);
  }
  state.strongest = local_strongest(net, view, cache, n);
}

FinalCommunities finalize_communities(const LocalView& view, const AffiliationState& state,
                                      NodeRef seed, bool over_layer) {
  const std::size_t m = state.z.size();
  double max_delta = 0.0;
  for (LayerId w = 0; w < m; ++w) {
    if (state.active[w]) max_delta = std::max(max_delta, state.delta[w]);
  }
  FinalCommunities out;
  out.communities.resize(m);
  out.blend.resize(m);
  for (LayerId w = 0; w < m; ++w) {
    if (!state.active[w]) continue;
    const std::vector<NodeId> nodes = view.frontier(w).visited();
    const NodeVector mapped = map_unified_to_layer(state.unified, state.strongest[w], nodes);
    const double scale = max_delta > 0.0 ? state.delta[w] / max_delta : 1.0;
    std::vector<double> b(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      b[k] = scale * state.z[w].at(nodes[k]) + (1.0 - scale) * mapped.values()[k];
    }
    NodeVector blend(nodes, b);
    const double count = over_layer
                             ? static_cast<double>(view.network().layer(w).node_count())
                             : static_cast<double>(nodes.size());
    const double threshold = blend.sum() / count;
    std::vector<NodeId>& community = out.communities[w];
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (b[k] > threshold) community.push_back(nodes[k]);
    }
    if (w == seed.layer && !std::binary_search(community.begin(), community.end(), seed.node)) {
      community.insert(std::lower_bound(community.begin(), community.end(), seed.node), seed.node);
    }
    out.blend[w] = std::move(blend);
  }
  return out;
}

}  // namespace lama
