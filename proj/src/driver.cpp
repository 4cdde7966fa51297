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

#include "lama/driver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lama/consensus.hpp"
#include "lama/expansion.hpp"
#include "lama/local_view.hpp"

namespace lama {

void LamaConfig::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (t <= 0 || t % 2 == 0) throw std::invalid_argument("t must be an odd positive integer");
  if (max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
  if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");
}

namespace {

std::vector<NodeId> top_entries(const SparseMatrix::Row& row, int t) {
  std::vector<std::pair<NodeId, double>> entries(row.begin(), row.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (entries.size() > static_cast<std::size_t>(t)) entries.resize(static_cast<std::size_t>(t));
  std::vector<NodeId> out;
  out.reserve(entries.size());
  for (const auto& [node, _] : entries) out.push_back(node);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LayerNodeSets init_seeds(const MultiNetwork& net, NodeRef seed, const LamaConfig& config,
                         std::vector<std::string>* warnings) {
  const std::size_t m = net.layer_count();
  if (seed.layer >= m) throw std::out_of_range("seed layer out of range");
  if (seed.node >= net.layer(seed.layer).node_count()) {
    throw std::out_of_range("seed node out of range");
  }
  LayerNodeSets seeds(m);
  if (net.kind() == NetworkKind::multi_view) {
    for (LayerId w = 0; w < m; ++w) {
      if (seed.node < net.layer(w).node_count()) {
        seeds[w] = {seed.node};
      } else if (warnings != nullptr) {
        warnings->push_back("layer " + std::to_string(w) + " does not contain the seed node");
      }
    }
    return seeds;
  }

  seeds[seed.layer] = {seed.node};
  const NodeId origin[] = {seed.node};
  bool grew = true;
  while (grew) {
    grew = false;
    const StrongestPaths paths =
        strongest_paths(local_inter_from(net, seeds), seed.layer, origin);
    for (LayerId w = 0; w < m; ++w) {
      if (!seeds[w].empty()) continue;
      std::vector<NodeId> picked = top_entries(paths.matrices[w].row(seed.node), config.t);
      if (picked.empty()) continue;
      seeds[w] = std::move(picked);
      grew = true;
    }
  }
  if (warnings != nullptr) {
    for (LayerId w = 0; w < m; ++w) {
      if (seeds[w].empty()) {
        warnings->push_back("no inter-layer path from the seed to layer " + std::to_string(w) +
                            "; layer excluded");
      }
    }
  }
  return seeds;
}

DetectionResult detect(const MultiNetwork& net, NodeRef seed, const LamaConfig& config) {
  config.validate();
  const std::size_t m = net.layer_count();
  DetectionResult result;
  result.seed = seed;

  const LayerNodeSets seeds = init_seeds(net, seed, config, &result.warnings);
  LocalView view = init_frontiers(net, seeds);
  LocalInterCache cache(m);

  AffiliationState state;
  state.seed_layer = seed.layer;
  state.active.resize(m);
  state.z.resize(m);
  for (LayerId w = 0; w < m; ++w) state.active[w] = !seeds[w].empty();

  // Affiliations start at 1 / 0.5 / 0; boundary values are then refined by
  // one sweep of the regularised quality ratio with core and shell held.
  std::vector<LayerSubgraph> subgraphs(m);
  for (LayerId w = 0; w < m; ++w) {
    if (!state.active[w]) continue;
    const LayerFrontier& f = view.frontier(w);
    subgraphs[w] = LayerSubgraph::build(view, w, config.shell_edges);
    state.z[w] = initial_affiliation(f);
    std::vector<NodeId> held(f.core().begin(), f.core().end());
    held.insert(held.end(), f.shell().begin(), f.shell().end());
    std::sort(held.begin(), held.end());
    state.z[w] = sweep_update_z(subgraphs[w], state.z[w], ConsensusTerm{}, config.beta, held,
                                config.grid_size);
  }

  state.delta.assign(m, 0.0);
  for (LayerId w = 0; w < m; ++w) {
    if (state.active[w]) state.delta[w] = 1.0 / static_cast<double>(m);
  }
  state.strongest = local_strongest(net, view, cache, seed.layer);
  state.unified = update_unified(state.z, state.delta, state.strongest, state.active,
                                 view.frontier(seed.layer).visited(), config.literal_eq19);

  for (int iter = 1; iter <= config.max_iter; ++iter) {
    IterationTrace trace;
    trace.iteration = iter;
    trace.objective_before.assign(m, 0.0);
    trace.objective_after.assign(m, 0.0);

    for (LayerId w = 0; w < m; ++w) {
      if (!state.active[w]) continue;
      const ConsensusTerm consensus{&state.unified, &state.strongest[w], state.delta[w]};
      const std::set<NodeId>& core = view.frontier(w).core();
      const std::vector<NodeId> pinned(core.begin(), core.end());
      trace.objective_before[w] = layer_objective(subgraphs[w], state.z[w], consensus, config.beta);
      state.z[w] = sweep_update_z(subgraphs[w], state.z[w], consensus, config.beta, pinned,
                                  config.grid_size);
      trace.objective_after[w] = layer_objective(subgraphs[w], state.z[w], consensus, config.beta);
    }

    state.delta = update_weights(state.unified, state.z, state.strongest, state.active);
    state.unified = update_unified(state.z, state.delta, state.strongest, state.active,
                                   state.unified.ids(), config.literal_eq19);

    bool changed = false;
    std::vector<std::vector<NodeId>> newly_visited(m);
    for (LayerId w = 0; w < m; ++w) {
      if (!state.active[w]) continue;
      ExpansionStep step = expand_core(view, state.z[w], w);
      for (NodeId v : step.joined) state.z[w].set(v, kCoreAffiliation);
      changed = changed || step.changed();
      newly_visited[w] = std::move(step.newly_visited);
    }
    if (changed) {
      adjust_state(net, view, cache, newly_visited, state);
      for (LayerId w = 0; w < m; ++w) {
        // Core growth changes which pairs are known even without new nodes.
        if (state.active[w]) subgraphs[w] = LayerSubgraph::build(view, w, config.shell_edges);
      }
    }

    trace.delta = state.delta;
    trace.core_sizes.resize(m);
    for (LayerId w = 0; w < m; ++w) trace.core_sizes[w] = view.frontier(w).core().size();
    result.trace.push_back(std::move(trace));
    result.iterations_run = iter;
    if (!changed) {
      result.converged = true;
      break;
    }
  }

  FinalCommunities final = finalize_communities(view, state, seed, config.threshold_over_layer);
  result.communities = std::move(final.communities);
  result.blend = std::move(final.blend);
  result.z = std::move(state.z);
  result.delta = std::move(state.delta);
  result.unified = std::move(state.unified);
  result.active = std::move(state.active);
  for (LayerId w = 0; w < m; ++w) {
    const LayerFrontier& f = view.frontier(w);
    result.access_counts.push_back(f.access_count());
    result.visited_counts.push_back(f.visited_count());
    result.core_sizes.push_back(f.core().size());
    result.cores.emplace_back(f.core().begin(), f.core().end());
  }
  return result;
}

}  // namespace lama
