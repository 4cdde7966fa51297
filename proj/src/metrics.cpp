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

#include "lama/metrics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace lama {

Prf prf(std::span<const NodeId> community, std::span<const NodeId> truth) {
  std::vector<NodeId> c(community.begin(), community.end());
  std::vector<NodeId> t(truth.begin(), truth.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.empty()) throw Error("undefined ground truth");

  std::vector<NodeId> common;
  std::set_intersection(c.begin(), c.end(), t.begin(), t.end(), std::back_inserter(common));
  const double hit = static_cast<double>(common.size());
  Prf out;
  out.recall = hit / static_cast<double>(t.size());
  out.precision = c.empty() ? 0.0 : hit / static_cast<double>(c.size());
  const double denom = out.precision + out.recall;
  out.fscore = denom > 0.0 ? 2.0 * out.precision * out.recall / denom : 0.0;
  return out;
}

Prf mean(std::span<const Prf> values) {
  Prf out;
  if (values.empty()) return out;
  for (const Prf& v : values) {
    out.recall += v.recall;
    out.precision += v.precision;
    out.fscore += v.fscore;
  }
  const double n = static_cast<double>(values.size());
  out.recall /= n;
  out.precision /= n;
  out.fscore /= n;
  return out;
}

Prf aggregate(const std::vector<std::vector<Prf>>& per_seed_per_layer) {
  std::vector<Prf> per_seed;
  per_seed.reserve(per_seed_per_layer.size());
  for (const auto& layers : per_seed_per_layer) per_seed.push_back(mean(layers));
  return mean(per_seed);
}

GroundTruth::GroundTruth(const MultiNetwork& net) {
  for (const LayerGraph& g : net.layers()) labels_.emplace_back(g.node_count(), kUnlabeled);
}

GroundTruth::GroundTruth(std::vector<std::size_t> layer_sizes) {
  for (std::size_t n : layer_sizes) labels_.emplace_back(n, kUnlabeled);
}

int GroundTruth::intern(const std::string& name) {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<int>(it - names_.begin());
  names_.push_back(name);
  return static_cast<int>(names_.size() - 1);
}

void GroundTruth::assign(LayerId w, NodeId node, const std::string& label) {
  assign(w, node, intern(label));
}

void GroundTruth::assign(LayerId w, NodeId node, int label_id) {
  if (w >= labels_.size()) throw std::out_of_range("ground truth: layer out of range");
  if (node >= labels_[w].size()) throw std::out_of_range("ground truth: node out of range");
  if (label_id < 0 || static_cast<std::size_t>(label_id) >= names_.size()) {
    throw std::out_of_range("ground truth: unknown label id");
  }
  labels_[w][node] = label_id;
}

std::optional<int> GroundTruth::label(LayerId w, NodeId node) const {
  if (w >= labels_.size() || node >= labels_[w].size()) return std::nullopt;
  const int l = labels_[w][node];
  if (l == kUnlabeled) return std::nullopt;
  return l;
}

std::vector<NodeId> GroundTruth::members(LayerId w, int label_id) const {
  std::vector<NodeId> out;
  const auto& layer = labels_.at(w);
  for (NodeId v = 0; v < layer.size(); ++v) {
    if (layer[v] == label_id) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> GroundTruth::truth_for(NodeRef seed, LayerId w) const {
  auto l = label(seed.layer, seed.node);
  if (!l) throw Error("seed " + std::to_string(seed.layer) + ":" + std::to_string(seed.node) +
                      " has no ground-truth label");
  return members(w, *l);
}

std::vector<NodeRef> GroundTruth::missing(const MultiNetwork& net) const {
  std::vector<NodeRef> out;
  for (LayerId w = 0; w < net.layer_count(); ++w) {
    for (NodeId v = 0; v < net.layer(w).node_count(); ++v) {
      if (!label(w, v)) out.push_back(NodeRef{w, v});
    }
  }
  return out;
}

std::vector<GroundTruth::Row> GroundTruth::rows() const {
  std::vector<Row> out;
  for (LayerId w = 0; w < labels_.size(); ++w) {
    for (NodeId v = 0; v < labels_[w].size(); ++v) {
      if (labels_[w][v] != kUnlabeled) out.push_back(Row{w, v, names_[static_cast<std::size_t>(labels_[w][v])]});
    }
  }
  return out;
}

}  // namespace lama
