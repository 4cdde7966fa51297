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

#ifndef LAMA_SPARSE_HPP_
#define LAMA_SPARSE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lama/types.hpp"

namespace lama {

// Vector indexed by node id, stored as parallel arrays sorted by id.
// Used for affiliations (layer space) and the unified affiliation (seed
// layer space).
class NodeVector {
 public:
  NodeVector() = default;
  NodeVector(std::vector<NodeId> ids, double fill);
  NodeVector(std::vector<NodeId> ids, std::vector<double> values);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  std::span<const NodeId> ids() const { return ids_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  bool contains(NodeId id) const { return index_of(id).has_value(); }
  std::optional<std::size_t> index_of(NodeId id) const;

  // Throws std::out_of_range when `id` is absent.
  double at(NodeId id) const;
  double value_or(NodeId id, double fallback) const;

  // Inserts or overwrites.
  void set(NodeId id, double value);

  double sum() const;
  double mean() const;  // 0 for an empty vector
  double squared_norm() const;

  friend bool operator==(const NodeVector&, const NodeVector&) = default;

 private:
  std::vector<NodeId> ids_;
  std::vector<double> values_;
};

// Row-major sparse matrix keyed by node ids. Row and column id spaces are
// independent (rows usually live in one layer, columns in another).
class SparseMatrix {
 public:
  using Row = std::map<NodeId, double>;

  static SparseMatrix identity(std::span<const NodeId> ids);

  void set(NodeId row, NodeId col, double value);  // zero erases
  double get(NodeId row, NodeId col) const;

  // Empty row when absent.
  const Row& row(NodeId row) const;
  const std::map<NodeId, Row>& rows() const { return rows_; }

  std::size_t nnz() const;
  bool empty() const { return rows_.empty(); }

  // Column-major copy: column id -> (row id, value) ascending by row.
  std::map<NodeId, std::vector<std::pair<NodeId, double>>> columns() const;

  SparseMatrix transposed() const;

  // Keeps only entries whose row is in `rows` and column is in `cols`
  // (both sorted ascending).
  SparseMatrix restricted(std::span<const NodeId> rows,
                          std::span<const NodeId> cols) const;

  // Entry-wise maximum with `other`, in place.
  void max_with(const SparseMatrix& other);

  // Caps every entry at `ceiling`.
  void clamp_above(double ceiling);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::map<NodeId, Row> rows_;
};

// Ordinary (sum-product) matrix product. For every output entry the
// accumulation runs over the shared index in ascending order.
SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs);

// Sorted union / difference helpers for node id sets.
std::vector<NodeId> sorted_union(std::span<const NodeId> a,
                                 std::span<const NodeId> b);
std::vector<NodeId> sorted_difference(std::span<const NodeId> a,
                                      std::span<const NodeId> b);

}  // namespace lama

#endif  // LAMA_SPARSE_HPP_
