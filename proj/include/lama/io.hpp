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

#ifndef LAMA_IO_HPP_
#define LAMA_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lama/datagen.hpp"
#include "lama/driver.hpp"
#include "lama/evaluation.hpp"
#include "lama/metrics.hpp"
#include "lama/multinet.hpp"

namespace lama::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

inline constexpr int kSchemaVersion = 1;

// Raised for malformed input; what() reads "<file>:<line>: <message>".
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& message);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// name -> dense id, from a `node<TAB>name` file.
using LabelMap = std::unordered_map<std::string, NodeId>;

LabelMap read_label_map(const fs::path& path);

// `u<TAB>v[<TAB>weight]`; blank lines and lines starting with '#' are
// skipped. With a label map the endpoints are names from the map.
std::vector<Edge> read_edges(const fs::path& path, const LabelMap* labels = nullptr);

// `layer_a<TAB>u<TAB>layer_b<TAB>v<TAB>weight`.
std::vector<InterEdge> read_inter_edges(const fs::path& path,
                                        const std::vector<LabelMap>* labels = nullptr);

// `layer<TAB>node<TAB>label`.
GroundTruth read_ground_truth(const fs::path& path, const MultiNetwork& net);

void write_edges(const fs::path& path, const LayerGraph& graph);
void write_inter_edges(const fs::path& path, const MultiNetwork& net);
void write_ground_truth(const fs::path& path, const GroundTruth& truth);

struct DatasetLayout {
  NetworkKind kind = NetworkKind::multi_view;
  std::vector<std::string> layer_files;  // relative to the dataset dir
  std::vector<std::size_t> node_counts;  // 0 = infer from the edges
  std::vector<std::string> label_maps;   // "" = none
  std::string inter_file;                // "" = none
  std::string ground_truth_file;         // "" = none
  std::optional<GenSpec> generator;
};

struct Dataset {
  fs::path dir;
  DatasetLayout layout;
  MultiNetwork network;
  std::optional<GroundTruth> truth;
  std::vector<std::string> warnings;
};

// Reads `manifest.json` when present; otherwise discovers layer_<w>.tsv,
// inter.tsv and ground_truth.tsv. A multi-domain dataset without an inter
// file throws Error("inter-layer edges required").
Dataset load_dataset(const fs::path& dir);

// Writes layer_<w>.tsv, inter.tsv (multi-domain), ground_truth.tsv and
// manifest.json.
void save_dataset(const fs::path& dir, const GeneratedData& data, const GenSpec* spec);

// "layer:node"; a bare "node" means layer 0.
NodeRef parse_seed(const std::string& text);
std::string format_seed(NodeRef seed);

Json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const Json& j);

Json to_json(const LamaConfig& config);
LamaConfig config_from_json(const Json& j);

Json to_json(const Prf& score);
Prf prf_from_json(const Json& j);

Json to_json(const DatasetLayout& layout);
DatasetLayout layout_from_json(const Json& j);

// Per-layer communities plus z, delta and U snapshots.
Json detection_to_json(const DetectionResult& result, const LamaConfig& config);

struct SeedSummary {
  NodeRef seed;
  std::vector<Prf> per_layer;
  Prf score;
  std::vector<std::size_t> community_sizes;
  int iterations = 0;
  bool converged = false;
  double seconds = 0.0;

  friend bool operator==(const SeedSummary&, const SeedSummary&) = default;
};

struct RunManifest {
  int schema_version = kSchemaVersion;
  std::string command;
  LamaConfig config;
  std::string dataset_dir;
  std::vector<std::string> dataset_files;
  std::uint64_t rng_seed = 0;
  std::optional<std::size_t> seed_sample;
  unsigned threads = 0;
  std::vector<SeedSummary> seeds;
  std::optional<Prf> aggregate;
  double total_seconds = 0.0;
  std::vector<std::string> warnings;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

Json to_json(const RunManifest& manifest);
RunManifest run_manifest_from_json(const Json& j);

std::vector<SeedSummary> summarize(const EvaluationReport& report);

// Every file of the layout that exists, relative to the dataset dir.
std::vector<std::string> dataset_files(const DatasetLayout& layout);

std::string read_text(const fs::path& path);
void write_text(const fs::path& path, const std::string& text);

}  // namespace lama::io

#endif  // LAMA_IO_HPP_
