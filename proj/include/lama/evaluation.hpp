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

#ifndef LAMA_EVALUATION_HPP_
#define LAMA_EVALUATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lama/driver.hpp"
#include "lama/metrics.hpp"
#include "lama/multinet.hpp"

namespace lama {

// Seeds used by the evaluation protocol: every node of layer 0 (multi-view:
// the shared node set; multi-domain: the first network). With `sample`, a
// deterministic subset of that size drawn with `rng_seed`, ascending.
std::vector<NodeRef> protocol_seeds(const MultiNetwork& net, std::optional<std::size_t> sample,
                                    std::uint64_t rng_seed);

struct SeedEvaluation {
  NodeRef seed;
  std::vector<Prf> per_layer;
  Prf score;  // mean over layers
  int iterations = 0;
  bool converged = false;
  std::vector<std::size_t> community_sizes;
  double seconds = 0.0;
};

struct EvaluationReport {
  std::vector<SeedEvaluation> seeds;  // in input seed order
  Prf aggregate;
  double seconds = 0.0;
};

// Runs detect for every seed on up to `threads` workers (0 = hardware
// concurrency) and scores each layer against T(seed, w). Throws, listing the
// first missing nodes, when the ground truth does not label every node.
EvaluationReport evaluate(const MultiNetwork& net, const GroundTruth& truth,
                          const LamaConfig& config, std::span<const NodeRef> seeds,
                          unsigned threads = 0);

enum class SweepParam { t, beta };

const char* to_string(SweepParam param);
SweepParam parse_sweep_param(const std::string& text);

// t: 1, 3, ..., 19. beta: 1e-7, 1e-6, ..., 1e-1, 0.5.
std::vector<double> default_sweep_grid(SweepParam param);

// Throws std::invalid_argument on an empty grid, a non-finite value, a t that
// is not an odd positive integer or a non-positive beta.
void validate_sweep_grid(SweepParam param, std::span<const double> grid);

struct SweepPoint {
  double value = 0.0;
  Prf aggregate;
  double seconds = 0.0;
};

// One evaluation per grid value with `base` otherwise unchanged.
std::vector<SweepPoint> sweep(const MultiNetwork& net, const GroundTruth& truth,
                              const LamaConfig& base, SweepParam param,
                              std::span<const double> grid, std::span<const NodeRef> seeds,
                              unsigned threads = 0);

}  // namespace lama

#endif  // LAMA_EVALUATION_HPP_
