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

#include "lama/local_view.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lama/sparse.hpp"

namespace lama {

std::optional<Role> LayerFrontier::role(NodeId node) const {
  if (core_.contains(node)) return Role::core;
  if (boundary_.contains(node)) return Role::boundary;
  if (shell_.contains(node)) return Role::shell;
  return std::nullopt;
}

std::vector<NodeId> LayerFrontier::visited() const {
  std::vector<NodeId> out;
  out.reserve(visited_count());
  out.insert(out.end(), core_.begin(), core_.end());
  out.insert(out.end(), boundary_.begin(), boundary_.end());
  out.insert(out.end(), shell_.begin(), shell_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> LayerFrontier::core_and_boundary() const {
  std::vector<NodeId> out(core_.begin(), core_.end());
  out.insert(out.end(), boundary_.begin(), boundary_.end());
  std::sort(out.begin(), out.end());
  return out;
}

LocalView::LocalView(const MultiNetwork& net) : net_(&net), frontiers_(net.layer_count()) {}

std::span<const Neighbor> LocalView::neighbors(LayerId w, NodeId node) {
  auto adj = net_->layer(w).neighbors(node);  // range-checks first
  frontiers_[w].queried_.insert(node);
  return adj;
}

const LayerFrontier& LocalView::frontier(LayerId w) const {
  if (w >= frontiers_.size()) throw std::out_of_range("layer out of range");
  return frontiers_[w];
}

void LocalView::seed_layer(LayerId w, std::span<const NodeId> seeds) {
  if (w >= frontiers_.size()) throw std::out_of_range("layer out of range");
  LayerFrontier& f = frontiers_[w];
  if (!f.core_.empty()) throw std::logic_error("layer " + std::to_string(w) + " already seeded");
  const std::size_t n = net_->layer(w).node_count();
  for (NodeId s : seeds) {
    if (s >= n) {
      throw std::out_of_range("seed " + std::to_string(s) + " not in layer " + std::to_string(w));
    }
  }
  f.core_.insert(seeds.begin(), seeds.end());
  rebuild_frontiers(w);
}

std::vector<NodeId> LocalView::grow_core(LayerId w, std::span<const NodeId> nodes) {
  LayerFrontier& f = frontiers_.at(w);
  const std::vector<NodeId> before = f.visited();
  for (NodeId v : nodes) {
    if (!f.is_visited(v)) {
      throw std::logic_error("grow_core: node " + std::to_string(v) + " is not visited");
    }
    f.boundary_.erase(v);
    f.shell_.erase(v);
    f.core_.insert(v);
  }
  rebuild_frontiers(w);
  return sorted_difference(f.visited(), before);
}

void LocalView::rebuild_frontiers(LayerId w) {
  LayerFrontier& f = frontiers_[w];
  f.boundary_.clear();
  f.shell_.clear();
  for (NodeId c : f.core_) {
    for (const Neighbor& nb : neighbors(w, c)) {
      if (!f.core_.contains(nb.node)) f.boundary_.insert(nb.node);
    }
  }
  auto expand_from = [&](NodeId x) {
    for (const Neighbor& nb : neighbors(w, x)) {
      if (!f.core_.contains(nb.node) && !f.boundary_.contains(nb.node)) f.shell_.insert(nb.node);
    }
  };
  for (NodeId c : f.core_) expand_from(c);
  for (NodeId b : f.boundary_) expand_from(b);
}

LocalView init_frontiers(const MultiNetwork& net, const LayerNodeSets& seeds_per_layer) {
  if (seeds_per_layer.size() != net.layer_count()) {
    throw std::invalid_argument("seed sets must be given for every layer");
  }
  LocalView view(net);
  for (LayerId w = 0; w < seeds_per_layer.size(); ++w) {
    if (!seeds_per_layer[w].empty()) view.seed_layer(w, seeds_per_layer[w]);
  }
  return view;
}

}  // namespace lama
