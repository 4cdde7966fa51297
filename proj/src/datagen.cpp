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

#include "lama/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lama {

const char* to_string(SizeMode mode) {
  return mode == SizeMode::equal ? "equal" : "power_law";
}

SizeMode parse_size_mode(const std::string& text) {
  if (text == "equal") return SizeMode::equal;
  if (text == "power_law" || text == "power-law") return SizeMode::power_law;
  throw std::invalid_argument("unknown size mode: " + text);
}

void GenSpec::validate() const {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (layers == 0) throw std::invalid_argument("layers must be positive");
  if (nodes == 0) throw std::invalid_argument("nodes must be positive");
  if (nodes > 0xFFFFFFFFull) throw std::invalid_argument("nodes exceeds the node id range");
  if (communities == 0 || communities > nodes) {
    throw std::invalid_argument("communities must be in [1, nodes]");
  }
  if (size_mode == SizeMode::equal && nodes % communities != 0) {
    throw std::invalid_argument("communities must divide nodes in equal mode");
  }
  if (size_mode == SizeMode::power_law && nodes < 10) {
    throw std::invalid_argument("power-law sizes need at least 10 nodes");
  }
  if (!prob(p_in) || !prob(p_out) || !(p_out < p_in)) {
    throw std::invalid_argument("p_in/p_out must satisfy 0 <= p_out < p_in <= 1");
  }
  if (!prob(p_cross_in) || !prob(p_cross_out)) {
    throw std::invalid_argument("p_cross_in/p_cross_out must lie in [0, 1]");
  }
  if (kind == NetworkKind::multi_view && (p_cross_in > 0.0 || p_cross_out > 0.0)) {
    throw std::invalid_argument("cross-layer probabilities apply to multi_domain only");
  }
}

GenSpec GenSpec::pep() {
  GenSpec s;
  s.kind = NetworkKind::multi_view;
  s.layers = 3;
  s.nodes = 100;
  s.communities = 10;
  s.size_mode = SizeMode::equal;
  // 450 intra pairs * 0.9 + 4500 inter pairs * 0.0312 ~ 545 edges per view.
  s.p_in = 0.9;
  s.p_out = 0.0312;
  s.seed = 1;
  return s;
}

GenSpec GenSpec::pnp() {
  GenSpec s = pep();
  s.size_mode = SizeMode::power_law;
  // Sizes for seed 1 give 653 intra pairs: 653 * 0.9 + 4297 * 0.079 ~ 927
  // edges per view, about 2786 in total.
  s.p_in = 0.9;
  s.p_out = 0.079;
  return s;
}

GenSpec GenSpec::multi_domain_toy() {
  GenSpec s;
  s.kind = NetworkKind::multi_domain;
  s.layers = 2;
  s.nodes = 200;
  s.communities = 4;
  s.size_mode = SizeMode::equal;
  s.p_in = 0.3;
  s.p_out = 0.01;
  s.p_cross_in = 0.1;
  s.p_cross_out = 0.002;
  s.seed = 1;
  return s;
}

GenSpec GenSpec::preset(const std::string& name) {
  if (name == "pep") return pep();
  if (name == "pnp") return pnp();
  if (name == "md-toy" || name == "multi-domain-toy") return multi_domain_toy();
  throw std::invalid_argument("unknown preset: " + name + " (expected pep, pnp or md-toy)");
}

std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  x ^= x >> 31;
  return std::mt19937_64(x);
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Fisher-Yates on raw engine output, portable across standard libraries.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

void bernoulli_pairs(const std::vector<int>& label, double p_in, double p_out,
                     std::mt19937_64& rng, std::vector<Edge>& out) {
  const std::size_t n = label.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = label[u] == label[v] ? p_in : p_out;
      // Always draw so the stream position does not depend on p.
      if (unit_uniform(rng) < p) {
        out.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
      }
    }
  }
}

std::vector<int> layout_labels(const std::vector<std::size_t>& sizes, std::mt19937_64& rng) {
  std::vector<int> label;
  for (std::size_t c = 0; c < sizes.size(); ++c) label.insert(label.end(), sizes[c], static_cast<int>(c));
  shuffle(label, rng);
  return label;
}

}  // namespace

std::vector<std::size_t> community_sizes(const GenSpec& spec, std::mt19937_64& rng) {
  const std::size_t n = spec.nodes;
  const std::size_t k = spec.communities;
  if (spec.size_mode == SizeMode::equal) return std::vector<std::size_t>(k, n / k);

  const double lo = 5.0;
  const double hi = std::max(lo, static_cast<double>(n) / 2.0);
  std::vector<double> raw(k);
  for (double& s : raw) {
    // Inverse CDF of p(x) ~ x^-2 on [lo, hi].
    const double u = unit_uniform(rng);
    s = 1.0 / (1.0 / lo - u * (1.0 / lo - 1.0 / hi));
  }
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  std::vector<std::size_t> sizes(k);
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const double exact = raw[c] * static_cast<double>(n) / total;
    sizes[c] = static_cast<std::size_t>(std::floor(exact));
    assigned += sizes[c];
    remainders.emplace_back(exact - std::floor(exact), c);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++sizes[remainders[i % k].second];
  // Keep every community at least 2 nodes by taking from the largest.
  for (std::size_t c = 0; c < k; ++c) {
    while (sizes[c] < 2) {
      auto big = std::max_element(sizes.begin(), sizes.end());
      if (*big <= 2) throw std::invalid_argument("too many communities for power-law sizes");
      --*big;
      ++sizes[c];
    }
  }
  return sizes;
}

GeneratedData generate(const GenSpec& spec) {
  spec.validate();
  const std::size_t m = spec.layers;
  std::mt19937_64 partition_rng = derive_stream(spec.seed, 0);
  const std::vector<std::size_t> sizes = community_sizes(spec, partition_rng);

  std::vector<std::vector<int>> labels(m);
  if (spec.kind == NetworkKind::multi_view) {
    labels.assign(m, layout_labels(sizes, partition_rng));
  } else {
    for (auto& l : labels) l = layout_labels(sizes, partition_rng);
  }

  std::vector<LayerGraph> graphs;
  for (std::size_t w = 0; w < m; ++w) {
    std::mt19937_64 rng = derive_stream(spec.seed, 1 + w);
    std::vector<Edge> edges;
    bernoulli_pairs(labels[w], spec.p_in, spec.p_out, rng, edges);
    graphs.push_back(LayerGraph::from_edges(spec.nodes, edges));
  }

  GeneratedData out;
  if (spec.kind == NetworkKind::multi_view) {
    out.network = MultiNetwork::multi_view(std::move(graphs));
  } else {
    std::vector<InterEdge> inter;
    std::uint64_t pair = 0;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b, ++pair) {
        std::mt19937_64 rng = derive_stream(spec.seed, 1 + m + pair);
        for (std::size_t u = 0; u < spec.nodes; ++u) {
          for (std::size_t v = 0; v < spec.nodes; ++v) {
            const double p = labels[a][u] == labels[b][v] ? spec.p_cross_in : spec.p_cross_out;
            if (unit_uniform(rng) < p) {
              inter.push_back(InterEdge{a, static_cast<NodeId>(u), b, static_cast<NodeId>(v), 1.0});
            }
          }
        }
      }
    }
    out.network = MultiNetwork::multi_domain(std::move(graphs), inter);
  }

  out.truth = GroundTruth(out.network);
  for (std::size_t c = 0; c < sizes.size(); ++c) out.truth.intern("c" + std::to_string(c));
  for (std::size_t w = 0; w < m; ++w) {
    for (std::size_t v = 0; v < spec.nodes; ++v) {
      out.truth.assign(w, static_cast<NodeId>(v), labels[w][v]);
    }
  }
  return out;
}

GeneratedData planted_community(std::size_t nodes, std::size_t community_size, std::size_t views,
                                double p_in, double p_out, std::uint64_t seed) {
  if (community_size == 0 || community_size > nodes) {
    throw std::invalid_argument("community size must be in [1, nodes]");
  }
  if (views == 0) throw std::invalid_argument("views must be positive");
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out < p_in)) {
    throw std::invalid_argument("p_in/p_out must satisfy 0 <= p_out < p_in <= 1");
  }
  std::vector<int> label(nodes, 1);
  std::fill(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(community_size), 0);
  // Background pairs share label 1 but are sampled at p_out.
  std::vector<LayerGraph> graphs;
  for (std::size_t w = 0; w < views; ++w) {
    std::mt19937_64 rng = derive_stream(seed, 1 + w);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < nodes; ++u) {
      for (std::size_t v = u + 1; v < nodes; ++v) {
        const double p = (label[u] == 0 && label[v] == 0) ? p_in : p_out;
        if (unit_uniform(rng) < p) edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
      }
    }
    graphs.push_back(LayerGraph::from_edges(nodes, edges));
  }
  GeneratedData out;
  out.network = MultiNetwork::multi_view(std::move(graphs));
  out.truth = GroundTruth(out.network);
  out.truth.intern("c0");
  out.truth.intern("bg");
  for (std::size_t w = 0; w < views; ++w) {
    for (std::size_t v = 0; v < nodes; ++v) out.truth.assign(w, static_cast<NodeId>(v), label[v]);
  }
  return out;
}

}  // namespace lama
