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

#ifndef LAMA_METRICS_HPP_
#define LAMA_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lama/multinet.hpp"
#include "lama/types.hpp"

namespace lama {

struct Prf {
  double recall = 0.0;
  double precision = 0.0;
  double fscore = 0.0;

  friend bool operator==(const Prf&, const Prf&) = default;
};

// recall = |C n T| / |T|, precision = |C n T| / |C| (0 for empty C),
// fscore = harmonic mean (0 when both are 0). Throws on empty T.
Prf prf(std::span<const NodeId> community, std::span<const NodeId> truth);

// Unweighted mean of triples; an empty input yields zeros.
Prf mean(std::span<const Prf> values);

// Per seed: mean over layers. Per dataset: mean over seeds.
Prf aggregate(const std::vector<std::vector<Prf>>& per_seed_per_layer);

// Community labels per layer. Labels are interned strings; nodes of the
// same label in different layers belong to aligned communities.
class GroundTruth {
 public:
  static constexpr int kUnlabeled = -1;

  GroundTruth() = default;
  explicit GroundTruth(const MultiNetwork& net);
  explicit GroundTruth(std::vector<std::size_t> layer_sizes);

  std::size_t layer_count() const { return labels_.size(); }

  void assign(LayerId w, NodeId node, const std::string& label);
  void assign(LayerId w, NodeId node, int label_id);

  std::optional<int> label(LayerId w, NodeId node) const;
  const std::string& label_name(int label_id) const { return names_.at(static_cast<std::size_t>(label_id)); }
  std::size_t label_count() const { return names_.size(); }
  int intern(const std::string& name);

  // Nodes of layer w carrying `label_id`, ascending.
  std::vector<NodeId> members(LayerId w, int label_id) const;

  // T(seed, w): members of layer w sharing the seed's label. Throws when the
  // seed is unlabeled.
  std::vector<NodeId> truth_for(NodeRef seed, LayerId w) const;

  // Every (layer, node) of `net` without a label.
  std::vector<NodeRef> missing(const MultiNetwork& net) const;

  // Rows (layer, node, label) for every labeled node, in layer/node order.
  struct Row {
    LayerId layer;
    NodeId node;
    std::string label;
  };
  std::vector<Row> rows() const;

 private:
  std::vector<std::vector<int>> labels_;
  std::vector<std::string> names_;
};

}  // namespace lama

#endif  // LAMA_METRICS_HPP_
