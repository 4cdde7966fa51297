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

#ifndef LAMA_DRIVER_HPP_
#define LAMA_DRIVER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "lama/multinet.hpp"
#include "lama/objective.hpp"
#include "lama/sparse.hpp"
#include "lama/types.hpp"

namespace lama {

struct LamaConfig {
  double beta = 1e-4;          // regularisation weight
  int t = 11;                  // nodes mapped from the seed into other domains
  int max_iter = 20;
  bool literal_eq19 = false;   // unified update without sum(delta) normalisation
  int grid_size = kDefaultGridSize;
  bool shell_edges = true;     // include edges between two shell nodes
  bool threshold_over_layer = true;  // final mean over the whole layer

  // Throws std::invalid_argument on a non-positive beta / max_iter, an even or
  // non-positive t, or a grid smaller than 2.
  void validate() const;

  friend bool operator==(const LamaConfig&, const LamaConfig&) = default;
};

struct IterationTrace {
  int iteration = 0;
  // Per layer, value of the layer objective right before and after its sweep
  // (0 for inactive layers).
  std::vector<double> objective_before;
  std::vector<double> objective_after;
  std::vector<double> delta;
  std::vector<std::size_t> core_sizes;  // after expansion
};

struct DetectionResult {
  NodeRef seed;
  LayerNodeSets communities;
  std::vector<NodeVector> z;
  std::vector<NodeVector> blend;
  std::vector<double> delta;
  NodeVector unified;
  std::vector<bool> active;
  int iterations_run = 0;
  bool converged = false;
  std::vector<std::size_t> access_counts;   // distinct adjacency reads
  std::vector<std::size_t> visited_counts;  // |C u N u NN|
  std::vector<std::size_t> core_sizes;
  LayerNodeSets cores;  // final C^w, ascending
  std::vector<IterationTrace> trace;
  std::vector<std::string> warnings;
};

// Core seeds per layer. Multi-view: the seed node in every layer that has it.
// Multi-domain: {seed} in the seed layer; every other layer takes the top-t
// entries of row `seed` of P^{n->w} (ties by ascending node id). Layers are
// seeded breadth-first over the layer graph so that domains reachable only
// through intermediate layers still receive seeds. Unreachable layers get an
// empty set and a warning.
LayerNodeSets init_seeds(const MultiNetwork& net, NodeRef seed, const LamaConfig& config,
                         std::vector<std::string>* warnings = nullptr);

// Full local detection run for one seed.
DetectionResult detect(const MultiNetwork& net, NodeRef seed, const LamaConfig& config);

}  // namespace lama

#endif  // LAMA_DRIVER_HPP_
