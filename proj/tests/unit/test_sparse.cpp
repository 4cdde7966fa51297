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

#include "lama/sparse.hpp"
#include "oracles.hpp"

using namespace lama;

TEST_SUITE("sparse") {
  TEST_CASE("node vector keeps ids sorted and overwrites on set") {
    NodeVector v({5, 1, 3}, std::vector<double>{0.5, 0.1, 0.3});
    CHECK(std::vector<NodeId>(v.ids().begin(), v.ids().end()) == std::vector<NodeId>{1, 3, 5});
    CHECK(v.at(5) == 0.5);
    v.set(3, 0.9);
    v.set(0, 0.2);
    CHECK(v.size() == 4);
    CHECK(v.at(3) == 0.9);
    CHECK(v.value_or(7, -1.0) == -1.0);
    CHECK(v.sum() == doctest::Approx(1.7));
    CHECK(v.mean() == doctest::Approx(1.7 / 4));
    CHECK(v.squared_norm() == doctest::Approx(0.04 + 0.01 + 0.81 + 0.25));
    CHECK_THROWS_AS(v.at(9), std::out_of_range);
    CHECK(NodeVector().mean() == 0.0);
  }

  TEST_CASE("node vector rejects duplicates and length mismatch") {
    CHECK_THROWS_AS(NodeVector({1, 1}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NodeVector({1, 2}, std::vector<double>{0.0}), std::invalid_argument);
  }

  TEST_CASE("sparse matrix set, get and zero erase") {
    SparseMatrix m;
    m.set(0, 3, 0.6);
    m.set(0, 5, 0.1);
    CHECK(m.get(0, 3) == 0.6);
    CHECK(m.get(1, 1) == 0.0);
    CHECK(m.nnz() == 2);
    m.set(0, 5, 0.0);
    CHECK(m.nnz() == 1);
    CHECK(m.row(7).empty());
    const SparseMatrix t = m.transposed();
    CHECK(t.get(3, 0) == 0.6);
  }

  TEST_CASE("identity, restriction, max and clamp") {
    const std::vector<NodeId> ids{1, 4, 6};
    SparseMatrix id = SparseMatrix::identity(ids);
    CHECK(id.nnz() == 3);
    CHECK(id.get(4, 4) == 1.0);
    const std::vector<NodeId> keep{1, 6};
    CHECK(id.restricted(keep, keep).nnz() == 2);
    SparseMatrix a;
    a.set(1, 1, 0.3);
    a.set(2, 2, 1.7);
    a.max_with(id);
    CHECK(a.get(1, 1) == 1.0);
    a.clamp_above(1.0);
    CHECK(a.get(2, 2) == 1.0);
  }

  TEST_CASE("multiply matches the dense oracle exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      SparseMatrix a, b;
      for (NodeId i = 0; i < 6; ++i) {
        for (NodeId j = 0; j < 6; ++j) {
          if (oracle::uniform(rng) < 0.4) a.set(i, j, oracle::uniform(rng));
          if (oracle::uniform(rng) < 0.4) b.set(i, j, oracle::uniform(rng));
        }
      }
      CHECK(oracle::as_dense(multiply(a, b)) ==
            oracle::product(oracle::as_dense(a), oracle::as_dense(b)));
    }
  }

  TEST_CASE("sorted set helpers") {
    const std::vector<NodeId> a{1, 3, 5}, b{2, 3, 6};
    CHECK(sorted_union(a, b) == std::vector<NodeId>{1, 2, 3, 5, 6});
    CHECK(sorted_difference(a, b) == std::vector<NodeId>{1, 5});
  }
}
