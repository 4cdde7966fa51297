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
#include <set>
#include <vector>

#include "lama/local_view.hpp"
#include "oracles.hpp"

using namespace lama;

namespace {

MultiNetwork single(std::size_t n, const std::vector<Edge>& edges) {
  return MultiNetwork::multi_view({LayerGraph::from_edges(n, edges)});
}

std::vector<Edge> clique(NodeId first, NodeId size) {
  std::vector<Edge> out;
  for (NodeId u = first; u < first + size; ++u) {
    for (NodeId v = u + 1; v < first + size; ++v) out.push_back({u, v, 1.0});
  }
  return out;
}

}  // namespace

TEST_SUITE("local_view") {
  TEST_CASE("five-clique plus pendant") {
    std::vector<Edge> edges = clique(0, 5);
    edges.push_back({4, 5, 1.0});  // pendant 5 hangs off clique node 4
    edges.push_back({5, 6, 1.0});
    const MultiNetwork net = single(7, edges);
    const LocalView view = init_frontiers(net, {{0}});
    const LayerFrontier& f = view.frontier(0);
    CHECK(f.boundary() == std::set<NodeId>{1, 2, 3, 4});
    CHECK(f.shell() == std::set<NodeId>{5});
    CHECK(f.access_count() == 5);  // C u N only
    CHECK_FALSE(f.was_queried(5));
  }

  TEST_CASE("isolated seed has empty frontiers") {
    const MultiNetwork net = single(3, {{1, 2, 1.0}});
    const LocalView view = init_frontiers(net, {{0}});
    CHECK(view.frontier(0).boundary().empty());
    CHECK(view.frontier(0).shell().empty());
    CHECK(view.frontier(0).visited() == std::vector<NodeId>{0});
  }

  TEST_CASE("disjoint cliques stay separate") {
    std::vector<Edge> edges = clique(0, 5);
    const auto b = clique(5, 5);
    edges.insert(edges.end(), b.begin(), b.end());
    const LocalView view = init_frontiers(single(10, edges), {{2}});
    for (NodeId v : view.frontier(0).visited()) CHECK(v < 5);
    CHECK(view.frontier(0).visited_count() == 5);
  }

  TEST_CASE("invalid seeds throw") {
    const MultiNetwork net = single(3, {{0, 1, 1.0}});
    CHECK_THROWS_AS(init_frontiers(net, {{7}}), std::out_of_range);
    CHECK_THROWS_AS(init_frontiers(net, {{0}, {1}}), std::invalid_argument);
    LocalView view = init_frontiers(net, {{0}});
    CHECK_THROWS_AS(view.seed_layer(0, std::vector<NodeId>{1}), std::logic_error);
    CHECK_THROWS_AS(view.grow_core(0, std::vector<NodeId>{2}), std::logic_error);
  }

  TEST_CASE("frontiers match the brute-force neighbourhoods under random growth") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 8 + oracle::below(rng, 10);
      const auto edges = oracle::random_edges(rng, n, 0.25);
      const MultiNetwork net = single(n, edges);
      const NodeId seed = static_cast<NodeId>(oracle::below(rng, n));
      LocalView view = init_frontiers(net, {{seed}});
      std::set<NodeId> core{seed};
      for (int step = 0; step < 4; ++step) {
        const LayerFrontier& f = view.frontier(0);
        const oracle::Frontiers want = oracle::frontiers(net.layer(0), core);
        CHECK(f.core() == want.core);
        CHECK(f.boundary() == want.boundary);
        CHECK(f.shell() == want.shell);
        // Disjointness.
        for (NodeId v : f.boundary()) CHECK_FALSE(f.core().contains(v));
        for (NodeId v : f.shell()) {
          CHECK_FALSE(f.core().contains(v));
          CHECK_FALSE(f.boundary().contains(v));
        }
        // Only core and boundary adjacencies are read.
        CHECK(f.access_count() == f.core().size() + f.boundary().size());

        std::vector<NodeId> grow;
        for (NodeId v : f.visited()) {
          if (!core.contains(v) && oracle::uniform(rng) < 0.4) grow.push_back(v);
        }
        const std::vector<NodeId> before = f.visited();
        const std::vector<NodeId> fresh = view.grow_core(0, grow);
        core.insert(grow.begin(), grow.end());
        // Monotone core growth and the reported new nodes.
        for (NodeId v : core) CHECK(view.frontier(0).core().contains(v));
        CHECK(fresh == sorted_difference(view.frontier(0).visited(), before));
      }
    }
  }
}
