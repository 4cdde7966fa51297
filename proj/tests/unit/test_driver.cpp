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


#include <doctest.h>

#include <random>
#include <vector>

#include "lama/datagen.hpp"
#include "lama/driver.hpp"
#include "oracles.hpp"

using namespace lama;

namespace {

std::vector<Edge> clique(NodeId first, NodeId size) {
  std::vector<Edge> out;
  for (NodeId u = first; u < first + size; ++u) {
    for (NodeId v = u + 1; v < first + size; ++v) out.push_back({u, v, 1.0});
  }
  return out;
}

std::vector<Edge> two_cliques(NodeId size, bool bridge) {
  std::vector<Edge> edges = clique(0, size);
  const auto b = clique(size, size);
  edges.insert(edges.end(), b.begin(), b.end());
  if (bridge) edges.push_back({size - 1, size, 1.0});
  return edges;
}

std::vector<NodeId> range(NodeId first, NodeId last) {
  std::vector<NodeId> out;
  for (NodeId v = first; v < last; ++v) out.push_back(v);
  return out;
}

MultiNetwork seed_row_network() {
  std::vector<LayerGraph> layers{LayerGraph::from_edges(1, std::vector<Edge>{}),
                                 LayerGraph::from_edges(10, std::vector<Edge>{})};
  const std::vector<InterEdge> inter{{0, 0, 1, 3, 0.9}, {0, 0, 1, 5, 0.4}, {0, 0, 1, 8, 0.4}};
  return MultiNetwork::multi_domain(layers, inter);
}

}  // namespace

TEST_SUITE("driver") {
  TEST_CASE("config validation") {
    LamaConfig c;
    CHECK_NOTHROW(c.validate());
    c.t = 4;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = LamaConfig{};
    c.beta = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = LamaConfig{};
    c.max_iter = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = LamaConfig{};
    c.grid_size = 1;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("multi-view seeds every layer with the seed node") {
    const MultiNetwork net = MultiNetwork::multi_view(
        {LayerGraph::from_edges(10, clique(0, 10)), LayerGraph::from_edges(10, clique(0, 3))});
    CHECK(init_seeds(net, {0, 7}, LamaConfig{}) == LayerNodeSets{{7}, {7}});
    CHECK_THROWS_AS(init_seeds(net, {0, 10}, LamaConfig{}), std::out_of_range);
    CHECK_THROWS_AS(init_seeds(net, {2, 0}, LamaConfig{}), std::out_of_range);
  }

  TEST_CASE("multi-domain seeds are the top-t strongest entries") {
    const MultiNetwork net = seed_row_network();
    LamaConfig c;
    c.t = 1;
    CHECK(init_seeds(net, {0, 0}, c)[1] == std::vector<NodeId>{3});
    c.t = 3;
    CHECK(init_seeds(net, {0, 0}, c)[1] == std::vector<NodeId>{3, 5, 8});
    c.t = 11;
    CHECK(init_seeds(net, {0, 0}, c)[1] == std::vector<NodeId>{3, 5, 8});
  }

  TEST_CASE("ties in the seed row go to the smaller node id") {
    std::vector<LayerGraph> layers{LayerGraph::from_edges(1, std::vector<Edge>{}),
                                   LayerGraph::from_edges(10, std::vector<Edge>{})};
    const std::vector<InterEdge> inter{{0, 0, 1, 9, 0.4}, {0, 0, 1, 2, 0.4}, {0, 0, 1, 6, 0.4}};
    const MultiNetwork net = MultiNetwork::multi_domain(layers, inter);
    LamaConfig c;
    c.t = 1;
    CHECK(init_seeds(net, {0, 0}, c)[1] == std::vector<NodeId>{2});
  }

  TEST_CASE("unreachable layers are excluded with a warning") {
    const std::vector<Edge> two = two_cliques(3, false);
    std::vector<LayerGraph> layers{LayerGraph::from_edges(6, two), LayerGraph::from_edges(6, two),
                                   LayerGraph::from_edges(6, two)};
    const std::vector<InterEdge> inter{{0, 0, 1, 0, 1.0}, {0, 1, 1, 1, 1.0}, {0, 2, 1, 2, 1.0}};
    const MultiNetwork net = MultiNetwork::multi_domain(layers, inter);
    const DetectionResult r = detect(net, {0, 0}, LamaConfig{});
    CHECK(r.active == std::vector<bool>{true, true, false});
    CHECK(r.communities[2].empty());
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("layer 2") != std::string::npos);
    CHECK(r.communities[0] == std::vector<NodeId>{0, 1, 2});
  }

  TEST_CASE("two disjoint five-cliques over two views") {
    const std::vector<Edge> edges = two_cliques(5, false);
    const MultiNetwork net = MultiNetwork::multi_view(
        {LayerGraph::from_edges(10, edges), LayerGraph::from_edges(10, edges)});
    for (NodeId seed : {0u, 3u, 6u}) {
      const DetectionResult r = detect(net, {0, seed}, LamaConfig{});
      const std::vector<NodeId> want = seed < 5 ? range(0, 5) : range(5, 10);
      CHECK(r.communities[0] == want);
      CHECK(r.communities[1] == want);
      CHECK(r.converged);
    }
  }

  TEST_CASE("triangle beside a second triangle") {
    const MultiNetwork net =
        MultiNetwork::multi_view({LayerGraph::from_edges(6, two_cliques(3, false))});
    for (NodeId seed = 0; seed < 6; ++seed) {
      const DetectionResult r = detect(net, {0, seed}, LamaConfig{});
      CHECK(r.communities[0] == (seed < 3 ? range(0, 3) : range(3, 6)));
    }
  }

  TEST_CASE("a layer that is one tied clique keeps only the seed") {
    // Every visited node ends at z = 1, so no node is strictly above either
    // mean threshold and only the forced seed remains.
    const MultiNetwork net = MultiNetwork::multi_view({LayerGraph::from_edges(3, clique(0, 3))});
    for (NodeId seed = 0; seed < 3; ++seed) {
      const DetectionResult r = detect(net, {0, seed}, LamaConfig{});
      CHECK(r.communities[0] == std::vector<NodeId>{seed});
      for (double z : r.z[0].values()) CHECK(z == 1.0);
    }
  }

  TEST_CASE("two bridged cliques keep the seed's clique") {
    const std::vector<Edge> edges = two_cliques(6, true);
    const MultiNetwork net = MultiNetwork::multi_view({LayerGraph::from_edges(12, edges)});
    const DetectionResult r = detect(net, {0, 1}, LamaConfig{});
    CHECK(r.communities[0] == range(0, 6));
  }

  TEST_CASE("multi-domain blocks linked block to block") {
    const std::vector<Edge> edges = two_cliques(5, true);
    std::vector<InterEdge> inter;
    for (NodeId u = 0; u < 10; ++u) {
      for (NodeId v = 0; v < 10; ++v) {
        if ((u < 5) == (v < 5) && (u + v) % 2 == 0) inter.push_back({0, u, 1, v, 1.0});
      }
    }
    const MultiNetwork net = MultiNetwork::multi_domain(
        {LayerGraph::from_edges(10, edges), LayerGraph::from_edges(10, edges)}, inter);
    LamaConfig c;
    c.t = 3;
    const DetectionResult r = detect(net, {0, 2}, c);
    CHECK(r.communities[0] == range(0, 5));
    CHECK(r.communities[1] == range(0, 5));
  }

  TEST_CASE("runs are deterministic, terminate and keep the seed") {
    GenSpec spec = GenSpec::pep();
    spec.nodes = 60;
    spec.communities = 6;
    const GeneratedData data = generate(spec);
    LamaConfig c;
    c.max_iter = 7;
    for (NodeId seed = 0; seed < 60; seed += 7) {
      const DetectionResult a = detect(data.network, {0, seed}, c);
      const DetectionResult b = detect(data.network, {0, seed}, c);
      CHECK(a.communities == b.communities);
      CHECK(a.z == b.z);
      CHECK(a.delta == b.delta);
      CHECK(a.unified == b.unified);
      CHECK(a.iterations_run <= c.max_iter);
      CHECK(a.trace.size() == static_cast<std::size_t>(a.iterations_run));
      CHECK(std::binary_search(a.communities[0].begin(), a.communities[0].end(), seed));
      if (!a.converged) CHECK(a.iterations_run == c.max_iter);
    }
  }

  TEST_CASE("trace shows per-layer descent and monotone cores") {
    std::mt19937_64 rng(71);
    GenSpec spec = GenSpec::multi_domain_toy();
    spec.nodes = 80;
    const GeneratedData md = generate(spec);
    const GeneratedData mv = generate(GenSpec::pnp());
    for (const MultiNetwork* net : {&md.network, &mv.network}) {
      for (int k = 0; k < 10; ++k) {
        const NodeId seed = static_cast<NodeId>(oracle::below(rng, net->layer(0).node_count()));
        const DetectionResult r = detect(*net, {0, seed}, LamaConfig{});
        std::vector<std::size_t> last(net->layer_count(), 0);
        for (const IterationTrace& t : r.trace) {
          for (LayerId w = 0; w < net->layer_count(); ++w) {
            CHECK(t.objective_after[w] <= t.objective_before[w] + 1e-9);
            CHECK(t.core_sizes[w] >= last[w]);
            last[w] = t.core_sizes[w];
          }
        }
      }
    }
  }

  TEST_CASE("adjacency reads stay local") {
    const GeneratedData data = generate(GenSpec::pep());
    for (bool shell : {false, true}) {
      LamaConfig c;
      c.shell_edges = shell;
      for (NodeId seed = 0; seed < 100; seed += 9) {
        const DetectionResult r = detect(data.network, {0, seed}, c);
        for (LayerId w = 0; w < 3; ++w) {
          const oracle::Frontiers f = oracle::frontiers(
              data.network.layer(w), std::set<NodeId>(r.cores[w].begin(), r.cores[w].end()));
          CHECK(r.access_counts[w] <= r.visited_counts[w]);
          if (shell) {
            CHECK(r.access_counts[w] == r.visited_counts[w]);
          } else {
            CHECK(r.access_counts[w] <= f.core.size() + 2 * f.boundary.size());
          }
        }
      }
    }
  }
}
