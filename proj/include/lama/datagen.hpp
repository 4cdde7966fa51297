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

#ifndef LAMA_DATAGEN_HPP_
#define LAMA_DATAGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lama/metrics.hpp"
#include "lama/multinet.hpp"
#include "lama/types.hpp"

namespace lama {

enum class SizeMode { equal, power_law };

const char* to_string(SizeMode mode);
SizeMode parse_size_mode(const std::string& text);

struct GenSpec {
  NetworkKind kind = NetworkKind::multi_view;
  std::size_t layers = 3;
  std::size_t nodes = 100;  // per layer
  std::size_t communities = 10;
  SizeMode size_mode = SizeMode::equal;
  double p_in = 0.9;
  double p_out = 0.0;
  double p_cross_in = 0.0;   // multi-domain only
  double p_cross_out = 0.0;  // multi-domain only
  std::uint64_t seed = 1;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;

  // 3 views x 100 nodes, 10 equal communities, about 1636 intra edges in total.
  static GenSpec pep();
  // Same scale with power-law community sizes.
  static GenSpec pnp();
  // 2 domains x 200 nodes, 4 aligned blocks.
  static GenSpec multi_domain_toy();
  // Looks up one of "pep", "pnp", "md-toy".
  static GenSpec preset(const std::string& name);
};

struct GeneratedData {
  MultiNetwork network;
  GroundTruth truth;
};

// Deterministic splitmix-style stream derivation; stream 0 is the size/
// partition stream, 1 + w the intra edges of layer w, 1 + m + pair the
// inter-layer edges of a layer pair.
std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double unit_uniform(std::mt19937_64& rng);

// Community sizes for the spec, summing to spec.nodes. Power-law sizes are
// drawn from exponent 2 truncated to [5, n/2] then renormalised.
std::vector<std::size_t> community_sizes(const GenSpec& spec, std::mt19937_64& rng);

GeneratedData generate(const GenSpec& spec);

// One planted community of `community_size` nodes on top of an
// Erdos-Renyi background of density `p_out`, replicated over `views`
// views with independent edges. Labels are "c0" for the community and
// "bg" elsewhere; community members are nodes [0, community_size).
GeneratedData planted_community(std::size_t nodes, std::size_t community_size, std::size_t views,
                                double p_in, double p_out, std::uint64_t seed);

}  // namespace lama

#endif  // LAMA_DATAGEN_HPP_
