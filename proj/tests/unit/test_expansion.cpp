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

#include "lama/consensus.hpp"
#include "lama/expansion.hpp"
#include "lama/local_view.hpp"
#include "oracles.hpp"

using namespace lama;

namespace {

MultiNetwork single(std::size_t n, const std::vector<Edge>& edges) {
  return MultiNetwork::multi_view({LayerGraph::from_edges(n, edges)});
}

// Star around 0: C = {0}, N = {1, 2}, no shell.
MultiNetwork star3() { return single(3, {{0, 1, 1.0}, {0, 2, 1.0}}); }

// One-layer state with identity consensus, delta 1.
AffiliationState one_layer_state(const LocalView& view, const NodeVector& z) {
  AffiliationState s;
  s.active = {true};
  s.z = {z};
  s.delta = {1.0};
  const std::vector<NodeId> nodes = view.frontier(0).visited();
  s.unified = z;
  s.strongest = {SparseMatrix::identity(nodes)};
  return s;
}

}  // namespace

TEST_SUITE("expansion") {
  TEST_CASE("initial affiliation by role") {
    const MultiNetwork net = single(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    const LocalView view = init_frontiers(net, {{0}});
    const NodeVector z = initial_affiliation(view.frontier(0));
    CHECK(z == NodeVector({0, 1, 2}, std::vector<double>{1.0, 0.5, 0.0}));
  }

  TEST_CASE("z_norm examples") {
    const MultiNetwork net = star3();
    const LocalView view = init_frontiers(net, {{0}});
    CHECK(z_norm(view, NodeVector({0, 1, 2}, std::vector<double>{1.0, 0.5, 0.3}), 0) ==
          doctest::Approx(0.6));
    CHECK(z_norm(view, NodeVector({0, 1, 2}, 0.5), 0) == 0.5);
    const MultiNetwork lone = single(1, {});
    const LocalView lview = init_frontiers(lone, {{0}});
    CHECK(z_norm(lview, NodeVector({0}, 1.0), 0) == 1.0);
    const LocalView empty = init_frontiers(lone, {{}});
    CHECK_THROWS_AS(z_norm(empty, NodeVector(), 0), Error);
  }

  TEST_CASE("expand_core examples") {
    const MultiNetwork net = star3();
    LocalView view = init_frontiers(net, {{0}});
    ExpansionStep step = expand_core(view, NodeVector({0, 1, 2}, std::vector<double>{1.0, 0.9, 0.1}), 0);
    CHECK(step.joined == std::vector<NodeId>{1});
    CHECK(view.frontier(0).core() == std::set<NodeId>{0, 1});

    LocalView still = init_frontiers(net, {{0}});
    step = expand_core(still, NodeVector({0, 1, 2}, std::vector<double>{1.0, 0.0, 0.0}), 0);
    // z_norm = 1/3 and both boundary nodes sit below it.
    CHECK_FALSE(step.changed());
    CHECK(still.frontier(0).boundary() == std::set<NodeId>{1, 2});
  }

  TEST_CASE("a node exactly at the threshold does not move") {
    const MultiNetwork net = star3();
    LocalView view = init_frontiers(net, {{0}});
    // Mean of (1, 0.5, 0) is 0.5.
    const ExpansionStep step =
        expand_core(view, NodeVector({0, 1, 2}, std::vector<double>{1.0, 0.5, 0.0}), 0);
    CHECK_FALSE(step.changed());
  }

  TEST_CASE("planted five-clique is absorbed in one step") {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < 5; ++u) {
      for (NodeId v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
    }
    edges.push_back({4, 5, 1.0});
    edges.push_back({3, 6, 1.0});
    edges.push_back({5, 7, 1.0});
    edges.push_back({0, 8, 1.0});  // a boundary node at 0 pulls the mean below 1
    const MultiNetwork net = single(9, edges);
    LocalView view = init_frontiers(net, {{0}});
    NodeVector z(view.frontier(0).visited(), 0.0);
    for (NodeId v = 0; v < 5; ++v) z.set(v, 1.0);
    const ExpansionStep step = expand_core(view, z, 0);
    CHECK(step.joined == std::vector<NodeId>{1, 2, 3, 4});
    CHECK(view.frontier(0).core() == std::set<NodeId>{0, 1, 2, 3, 4});
    CHECK(view.frontier(0).boundary() == std::set<NodeId>{5, 6, 8});
    CHECK(view.frontier(0).shell() == std::set<NodeId>{7});
    CHECK(step.newly_visited == std::vector<NodeId>{7});
  }

  TEST_CASE("expansion keeps the frontiers exact on random graphs") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 10 + oracle::below(rng, 10);
      const auto edges = oracle::random_edges(rng, n, 0.2);
      const MultiNetwork net = single(n, edges);
      LocalView view = init_frontiers(net, {{0}});
      std::set<NodeId> core{0};
      for (int round = 0; round < 4; ++round) {
        const std::vector<NodeId> visited = view.frontier(0).visited();
        NodeVector z(visited, 0.0);
        for (NodeId v : visited) z.set(v, core.contains(v) ? 1.0 : oracle::grid_value(rng));
        const double threshold = z_norm(view, z, 0);
        std::set<NodeId> expect = core;
        for (NodeId v : view.frontier(0).boundary()) {
          if (z.at(v) > threshold) expect.insert(v);
        }
        expand_core(view, z, 0);
        core = expect;
        const oracle::Frontiers want = oracle::frontiers(net.layer(0), core);
        CHECK(view.frontier(0).core() == want.core);
        CHECK(view.frontier(0).boundary() == want.boundary);
        CHECK(view.frontier(0).shell() == want.shell);
      }
    }
  }

  TEST_CASE("adjust_state initialises new nodes") {
    // Path 4-0-1-2-3 seeded at 0: C = {0}, N = {1, 4}, NN = {2}.
    const MultiNetwork net = single(5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 4, 1.0}});
    LocalView view = init_frontiers(net, {{0}});
    LocalInterCache cache(1);
    AffiliationState state = one_layer_state(view, initial_affiliation(view.frontier(0)));
    state.unified = NodeVector({0, 1, 2, 4}, std::vector<double>{1.0, 0.5, 0.0, 0.5});

    // No new nodes: nothing changes.
    AffiliationState same = state;
    adjust_state(net, view, cache, {{}}, same);
    CHECK(same.z == state.z);
    CHECK(same.unified == state.unified);

    NodeVector z = state.z[0];
    z.set(1, 1.0);
    z.set(4, 0.0);
    const ExpansionStep step = expand_core(view, z, 0);
    REQUIRE(step.joined == std::vector<NodeId>{1});
    REQUIRE(step.newly_visited == std::vector<NodeId>{3});
    state.z[0] = z;
    adjust_state(net, view, cache, {step.newly_visited}, state);
    CHECK(state.z[0].at(3) == 0.0);
    // Node 2 moved from shell to boundary and keeps its value.
    CHECK(state.z[0].at(2) == 0.0);
    CHECK(state.unified.at(3) == doctest::Approx(0.5));
    CHECK(state.strongest[0].get(3, 3) == 1.0);
  }

  TEST_CASE("new boundary node gets one half") {
    // Growing the core straight onto a shell node can expose a new boundary node.
    const MultiNetwork net = single(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    LocalView view = init_frontiers(net, {{0}});
    LocalInterCache cache(1);
    AffiliationState state = one_layer_state(view, initial_affiliation(view.frontier(0)));
    const std::vector<NodeId> fresh = view.grow_core(0, std::vector<NodeId>{1, 2});
    REQUIRE(fresh == std::vector<NodeId>{3});
    REQUIRE(view.frontier(0).role(3) == Role::boundary);
    adjust_state(net, view, cache, {fresh}, state);
    CHECK(state.z[0].at(3) == 0.5);
  }

  TEST_CASE("final communities from the blend") {
    const MultiNetwork net = single(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
    LocalView view = init_frontiers(net, {{0}});
    REQUIRE(view.frontier(0).visited_count() == 4);
    NodeVector z({0, 1, 2, 3}, std::vector<double>{1.0, 1.0, 0.0, 0.0});
    AffiliationState state = one_layer_state(view, z);
    FinalCommunities out = finalize_communities(view, state, {0, 0});
    CHECK(out.communities[0] == std::vector<NodeId>{0, 1});

    // Uniform blend: nothing exceeds the mean, the seed is forced in.
    state = one_layer_state(view, NodeVector({0, 1, 2, 3}, 0.5));
    out = finalize_communities(view, state, {0, 2});
    CHECK(out.communities[0] == std::vector<NodeId>{2});
    out = finalize_communities(view, state, {0, 2}, false);
    CHECK(out.communities[0] == std::vector<NodeId>{2});
  }

  TEST_CASE("blend stays in the unit interval and uses the normalised weight") {
    const MultiNetwork net = MultiNetwork::multi_view(
        {LayerGraph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}}),
         LayerGraph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}})});
    LocalView view = init_frontiers(net, {{0}, {0}});
    AffiliationState state;
    state.active = {true, true};
    const std::vector<NodeId> nodes{0, 1, 2};
    state.z = {NodeVector(nodes, std::vector<double>{1.0, 0.5, 0.0}),
               NodeVector(nodes, std::vector<double>{1.0, 1.0, 1.0})};
    state.delta = {2.0, 1.0};
    state.unified = NodeVector(nodes, std::vector<double>{1.0, 0.25, 0.0});
    state.strongest = {SparseMatrix::identity(nodes), SparseMatrix::identity(nodes)};
    const FinalCommunities out = finalize_communities(view, state, {0, 0});
    // Layer 1 has weight 1/2 of the max: b = 0.5 z + 0.5 U.
    CHECK(out.blend[1].at(1) == doctest::Approx(0.625));
    CHECK(out.blend[0].at(1) == doctest::Approx(0.5));
    for (const NodeVector& b : out.blend) {
      for (double v : b.values()) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}
