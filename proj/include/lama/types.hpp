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

#ifndef LAMA_TYPES_HPP_
#define LAMA_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lama {

// Dense per-layer node identifier.
using NodeId = std::uint32_t;

// Index of a layer in [0, m).
using LayerId = std::size_t;

// A node addressed within a specific layer.
struct NodeRef {
  LayerId layer = 0;
  NodeId node = 0;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

enum class NetworkKind { multi_view, multi_domain };

const char* to_string(NetworkKind kind);
NetworkKind parse_network_kind(const std::string& text);

// Per-layer node sets, indexed by LayerId. An empty set means "no entry".
using LayerNodeSets = std::vector<std::vector<NodeId>>;

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lama

#endif  // LAMA_TYPES_HPP_
