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

#include "lama/sparse.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace lama {

const char* to_string(NetworkKind kind) {
  return kind == NetworkKind::multi_view ? "multi_view" : "multi_domain";
}

NetworkKind parse_network_kind(const std::string& text) {
  if (text == "multi_view" || text == "multi-view") return NetworkKind::multi_view;
  if (text == "multi_domain" || text == "multi-domain") return NetworkKind::multi_domain;
  throw Error("unknown network kind '" + text + "'");
}

NodeVector::NodeVector(std::vector<NodeId> ids, double fill)
    : ids_(std::move(ids)), values_(ids_.size(), fill) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw std::invalid_argument("NodeVector: duplicate node id");
  }
}

NodeVector::NodeVector(std::vector<NodeId> ids, std::vector<double> values) {
  if (ids.size() != values.size()) {
    throw std::invalid_argument("NodeVector: ids/values length mismatch");
  }
  std::vector<std::size_t> order(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  ids_.reserve(ids.size());
  values_.reserve(ids.size());
  for (std::size_t k : order) {
    if (!ids_.empty() && ids_.back() == ids[k]) {
      throw std::invalid_argument("NodeVector: duplicate node id");
    }
    ids_.push_back(ids[k]);
    values_.push_back(values[k]);
  }
}

std::optional<std::size_t> NodeVector::index_of(NodeId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

double NodeVector::at(NodeId id) const {
  auto idx = index_of(id);
  if (!idx) throw std::out_of_range("NodeVector: node " + std::to_string(id) + " not present");
  return values_[*idx];
}

double NodeVector::value_or(NodeId id, double fallback) const {
  auto idx = index_of(id);
  return idx ? values_[*idx] : fallback;
}

void NodeVector::set(NodeId id, double value) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  auto pos = static_cast<std::size_t>(it - ids_.begin());
  if (it != ids_.end() && *it == id) {
    values_[pos] = value;
    return;
  }
  ids_.insert(it, id);
  values_.insert(values_.begin() + static_cast<std::ptrdiff_t>(pos), value);
}

double NodeVector::sum() const {
  double total = 0.0;
  for (double v : values_) total += v;
  return total;
}

double NodeVector::mean() const {
  return values_.empty() ? 0.0 : sum() / static_cast<double>(values_.size());
}

double NodeVector::squared_norm() const {
  double total = 0.0;
  for (double v : values_) total += v * v;
  return total;
}

SparseMatrix SparseMatrix::identity(std::span<const NodeId> ids) {
  SparseMatrix m;
  for (NodeId id : ids) m.rows_[id][id] = 1.0;
  return m;
}

void SparseMatrix::set(NodeId row, NodeId col, double value) {
  if (value == 0.0) {
    auto it = rows_.find(row);
    if (it == rows_.end()) return;
    it->second.erase(col);
    if (it->second.empty()) rows_.erase(it);
    return;
  }
  rows_[row][col] = value;
}

double SparseMatrix::get(NodeId row, NodeId col) const {
  auto it = rows_.find(row);
  if (it == rows_.end()) return 0.0;
  auto jt = it->second.find(col);
  return jt == it->second.end() ? 0.0 : jt->second;
}

const SparseMatrix::Row& SparseMatrix::row(NodeId row) const {
  static const Row kEmpty;
  auto it = rows_.find(row);
  return it == rows_.end() ? kEmpty : it->second;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& [_, r] : rows_) total += r.size();
  return total;
}

std::map<NodeId, std::vector<std::pair<NodeId, double>>> SparseMatrix::columns() const {
  std::map<NodeId, std::vector<std::pair<NodeId, double>>> cols;
  for (const auto& [i, r] : rows_) {
    for (const auto& [j, v] : r) cols[j].emplace_back(i, v);
  }
  return cols;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t;
  for (const auto& [i, r] : rows_) {
    for (const auto& [j, v] : r) t.rows_[j][i] = v;
  }
  return t;
}

SparseMatrix SparseMatrix::restricted(std::span<const NodeId> rows,
                                      std::span<const NodeId> cols) const {
  SparseMatrix out;
  for (const auto& [i, r] : rows_) {
    if (!std::binary_search(rows.begin(), rows.end(), i)) continue;
    for (const auto& [j, v] : r) {
      if (std::binary_search(cols.begin(), cols.end(), j)) out.rows_[i][j] = v;
    }
  }
  return out;
}

void SparseMatrix::max_with(const SparseMatrix& other) {
  for (const auto& [i, r] : other.rows_) {
    for (const auto& [j, v] : r) {
      double& slot = rows_[i][j];
      slot = std::max(slot, v);
    }
  }
}

void SparseMatrix::clamp_above(double ceiling) {
  for (auto& [_, r] : rows_) {
    for (auto& [__, v] : r) v = std::min(v, ceiling);
  }
}

SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  SparseMatrix out;
  for (const auto& [i, lrow] : lhs.rows()) {
    std::map<NodeId, double> acc;
    for (const auto& [k, a] : lrow) {
      for (const auto& [j, b] : rhs.row(k)) acc[j] += a * b;
    }
    for (const auto& [j, v] : acc) out.set(i, j, v);
  }
  return out;
}

std::vector<NodeId> sorted_union(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::vector<NodeId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<NodeId> sorted_difference(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::vector<NodeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace lama
