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

#include "lama/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>
#include <string_view>

namespace lama::io {

ParseError::ParseError(const std::string& file, std::size_t line, const std::string& message)
    : Error(file + ":" + std::to_string(line) + ": " + message), file_(file), line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(const fs::path& path) : name_(path.string()), in_(path) {
    if (!in_) throw Error("cannot open " + name_);
  }

  // Next non-blank, non-comment line split on tabs/spaces.
  bool next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      fields.clear();
      std::size_t i = 0;
      while (i < line_.size()) {
        while (i < line_.size() && (line_[i] == '\t' || line_[i] == ' ')) ++i;
        const std::size_t start = i;
        while (i < line_.size() && line_[i] != '\t' && line_[i] != ' ') ++i;
        if (i > start) fields.emplace_back(line_.data() + start, i - start);
      }
      if (fields.empty() || fields[0].front() == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(name_, number_, message); }

  template <typename T>
  T parse_uint(std::string_view token, const char* what) const {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(std::string("invalid ") + what + " '" + std::string(token) + "'");
    }
    return value;
  }

  double parse_weight(std::string_view token) const {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
      fail("invalid weight '" + std::string(token) + "'");
    }
    return value;
  }

  NodeId parse_node(std::string_view token, const LabelMap* labels) const {
    if (labels != nullptr) {
      auto it = labels->find(std::string(token));
      if (it == labels->end()) fail("unknown node label '" + std::string(token) + "'");
      return it->second;
    }
    return parse_uint<NodeId>(token, "node id");
  }

 private:
  std::string name_;
  std::ifstream in_;
  std::string line_;
  std::size_t number_ = 0;
};

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out.precision(17);
  return out;
}

// Shortest text that reads back to the same double.
std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  (void)ec;
  return std::string(buf, ptr);
}

std::size_t layer_index_of(const std::string& file) {
  static const std::regex pattern(R"(layer_(\d+)\.tsv)");
  std::smatch m;
  if (std::regex_match(file, m, pattern)) return std::stoul(m[1].str());
  return std::numeric_limits<std::size_t>::max();
}

DatasetLayout discover_layout(const fs::path& dir) {
  DatasetLayout layout;
  std::vector<std::pair<std::size_t, std::string>> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    const std::size_t idx = layer_index_of(name);
    if (idx != std::numeric_limits<std::size_t>::max()) found.emplace_back(idx, name);
  }
  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].first != i) throw Error("layer files must be numbered layer_0.tsv, layer_1.tsv, ...");
    layout.layer_files.push_back(found[i].second);
  }
  if (layout.layer_files.empty()) throw Error("no layer_<w>.tsv files in " + dir.string());
  layout.node_counts.assign(layout.layer_files.size(), 0);
  layout.label_maps.assign(layout.layer_files.size(), "");
  if (fs::exists(dir / "inter.tsv")) {
    layout.kind = NetworkKind::multi_domain;
    layout.inter_file = "inter.tsv";
  }
  if (fs::exists(dir / "ground_truth.tsv")) layout.ground_truth_file = "ground_truth.tsv";
  return layout;
}

}  // namespace

LabelMap read_label_map(const fs::path& path) {
  LineReader reader(path);
  LabelMap out;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    if (f.size() != 2) reader.fail("expected 2 fields (node, name), got " + std::to_string(f.size()));
    const NodeId id = reader.parse_uint<NodeId>(f[0], "node id");
    if (!out.emplace(std::string(f[1]), id).second) {
      reader.fail("duplicate node name '" + std::string(f[1]) + "'");
    }
  }
  return out;
}

std::vector<Edge> read_edges(const fs::path& path, const LabelMap* labels) {
  LineReader reader(path);
  std::vector<Edge> out;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    if (f.size() != 2 && f.size() != 3) {
      reader.fail("expected 2 or 3 fields (u, v[, weight]), got " + std::to_string(f.size()));
    }
    Edge e;
    e.u = reader.parse_node(f[0], labels);
    e.v = reader.parse_node(f[1], labels);
    e.weight = f.size() == 3 ? reader.parse_weight(f[2]) : 1.0;
    if (!(e.weight > 0.0)) reader.fail("edge weight must be positive");
    out.push_back(e);
  }
  return out;
}

std::vector<InterEdge> read_inter_edges(const fs::path& path, const std::vector<LabelMap>* labels) {
  LineReader reader(path);
  std::vector<InterEdge> out;
  std::vector<std::string_view> f;
  auto map_for = [&](LayerId w) -> const LabelMap* {
    if (labels == nullptr || w >= labels->size() || (*labels)[w].empty()) return nullptr;
    return &(*labels)[w];
  };
  while (reader.next(f)) {
    if (f.size() != 5) {
      reader.fail("expected 5 fields (layer_a, u, layer_b, v, weight), got " + std::to_string(f.size()));
    }
    InterEdge e;
    e.layer_a = reader.parse_uint<LayerId>(f[0], "layer");
    e.u = reader.parse_node(f[1], map_for(e.layer_a));
    e.layer_b = reader.parse_uint<LayerId>(f[2], "layer");
    e.v = reader.parse_node(f[3], map_for(e.layer_b));
    e.weight = reader.parse_weight(f[4]);
    if (e.weight < 0.0) reader.fail("inter-layer weight must be non-negative");
    out.push_back(e);
  }
  return out;
}

GroundTruth read_ground_truth(const fs::path& path, const MultiNetwork& net) {
  LineReader reader(path);
  GroundTruth truth(net);
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    if (f.size() != 3) reader.fail("expected 3 fields (layer, node, label), got " + std::to_string(f.size()));
    const auto w = reader.parse_uint<LayerId>(f[0], "layer");
    const auto v = reader.parse_uint<NodeId>(f[1], "node id");
    if (w >= net.layer_count()) reader.fail("layer " + std::to_string(w) + " out of range");
    if (v >= net.layer(w).node_count()) reader.fail("node " + std::to_string(v) + " out of range");
    truth.assign(w, v, std::string(f[2]));
  }
  return truth;
}

void write_edges(const fs::path& path, const LayerGraph& graph) {
  std::ofstream out = open_out(path);
  for (const Edge& e : graph.edges()) {
    out << e.u << '\t' << e.v;
    if (e.weight != 1.0) out << '\t' << format_weight(e.weight);
    out << '\n';
  }
}

void write_inter_edges(const fs::path& path, const MultiNetwork& net) {
  std::ofstream out = open_out(path);
  for (const InterEdge& e : net.inter_edges()) {
    out << e.layer_a << '\t' << e.u << '\t' << e.layer_b << '\t' << e.v << '\t'
        << format_weight(e.weight) << '\n';
  }
}

void write_ground_truth(const fs::path& path, const GroundTruth& truth) {
  std::ofstream out = open_out(path);
  for (const auto& row : truth.rows()) out << row.layer << '\t' << row.node << '\t' << row.label << '\n';
}

Dataset load_dataset(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("dataset directory not found: " + dir.string());
  Dataset ds;
  ds.dir = dir;
  const fs::path manifest = dir / "manifest.json";
  if (fs::exists(manifest)) {
    Json j;
    try {
      j = Json::parse(read_text(manifest));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(manifest.string() + ": " + e.what());
    }
    ds.layout = layout_from_json(j);
  } else {
    ds.layout = discover_layout(dir);
  }
  DatasetLayout& layout = ds.layout;
  const std::size_t m = layout.layer_files.size();
  if (m == 0) throw Error("dataset has no layers");
  if (layout.kind == NetworkKind::multi_domain && layout.inter_file.empty()) {
    throw Error("inter-layer edges required");
  }
  if (layout.kind == NetworkKind::multi_domain && !fs::exists(dir / layout.inter_file)) {
    throw Error("inter-layer edges required: " + (dir / layout.inter_file).string() + " not found");
  }

  std::vector<LabelMap> maps(m);
  std::vector<std::vector<Edge>> edges(m);
  std::vector<std::size_t> counts(m, 0);
  for (std::size_t w = 0; w < m; ++w) {
    if (w < layout.label_maps.size() && !layout.label_maps[w].empty()) {
      maps[w] = read_label_map(dir / layout.label_maps[w]);
      for (const auto& [name, id] : maps[w]) counts[w] = std::max<std::size_t>(counts[w], std::size_t{id} + 1);
    }
    edges[w] = read_edges(dir / layout.layer_files[w], maps[w].empty() ? nullptr : &maps[w]);
    for (const Edge& e : edges[w]) counts[w] = std::max<std::size_t>(counts[w], std::size_t{std::max(e.u, e.v)} + 1);
    if (w < layout.node_counts.size() && layout.node_counts[w] > 0) {
      if (layout.node_counts[w] < counts[w]) {
        throw Error(layout.layer_files[w] + ": node id exceeds declared node count " +
                    std::to_string(layout.node_counts[w]));
      }
      counts[w] = layout.node_counts[w];
    }
  }
  std::vector<InterEdge> inter;
  if (layout.kind == NetworkKind::multi_domain) {
    inter = read_inter_edges(dir / layout.inter_file, &maps);
    for (const InterEdge& e : inter) {
      if (e.layer_a >= m || e.layer_b >= m) {
        throw Error(layout.inter_file + ": layer id out of range in inter-layer edge");
      }
      if (layout.node_counts.empty() || layout.node_counts[e.layer_a] == 0) {
        counts[e.layer_a] = std::max<std::size_t>(counts[e.layer_a], std::size_t{e.u} + 1);
      }
      if (layout.node_counts.empty() || layout.node_counts[e.layer_b] == 0) {
        counts[e.layer_b] = std::max<std::size_t>(counts[e.layer_b], std::size_t{e.v} + 1);
      }
    }
  } else {
    // Views share one node set.
    const std::size_t n = *std::max_element(counts.begin(), counts.end());
    counts.assign(m, n);
  }

  std::vector<LayerGraph> graphs;
  for (std::size_t w = 0; w < m; ++w) {
    std::vector<std::string> warnings;
    graphs.push_back(LayerGraph::from_edges(counts[w], edges[w], &warnings));
    for (auto& msg : warnings) ds.warnings.push_back(layout.layer_files[w] + ": " + msg);
  }
  if (layout.kind == NetworkKind::multi_view) {
    ds.network = MultiNetwork::multi_view(std::move(graphs));
  } else {
    ds.network = MultiNetwork::multi_domain(std::move(graphs), inter, &ds.warnings);
  }
  if (!layout.ground_truth_file.empty() && fs::exists(dir / layout.ground_truth_file)) {
    ds.truth = read_ground_truth(dir / layout.ground_truth_file, ds.network);
  }
  return ds;
}

void save_dataset(const fs::path& dir, const GeneratedData& data, const GenSpec* spec) {
  fs::create_directories(dir);
  DatasetLayout layout;
  const MultiNetwork& net = data.network;
  layout.kind = net.kind();
  for (std::size_t w = 0; w < net.layer_count(); ++w) {
    layout.layer_files.push_back("layer_" + std::to_string(w) + ".tsv");
    layout.node_counts.push_back(net.layer(w).node_count());
    layout.label_maps.emplace_back();
    write_edges(dir / layout.layer_files.back(), net.layer(w));
  }
  if (net.kind() == NetworkKind::multi_domain) {
    layout.inter_file = "inter.tsv";
    write_inter_edges(dir / layout.inter_file, net);
  }
  layout.ground_truth_file = "ground_truth.tsv";
  write_ground_truth(dir / layout.ground_truth_file, data.truth);
  if (spec != nullptr) layout.generator = *spec;
  write_text(dir / "manifest.json", to_json(layout).dump(2) + "\n");
}

NodeRef parse_seed(const std::string& text) {
  auto parse = [&](std::string_view token, auto& value) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("invalid seed '" + text + "' (expected layer:node)");
    }
  };
  NodeRef seed;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    parse(std::string_view(text), seed.node);
  } else {
    parse(std::string_view(text).substr(0, colon), seed.layer);
    parse(std::string_view(text).substr(colon + 1), seed.node);
  }
  return seed;
}

std::string format_seed(NodeRef seed) {
  return std::to_string(seed.layer) + ":" + std::to_string(seed.node);
}

Json to_json(const GenSpec& s) {
  return Json{{"kind", to_string(s.kind)},
              {"layers", s.layers},
              {"nodes", s.nodes},
              {"communities", s.communities},
              {"size_mode", to_string(s.size_mode)},
              {"p_in", s.p_in},
              {"p_out", s.p_out},
              {"p_cross_in", s.p_cross_in},
              {"p_cross_out", s.p_cross_out},
              {"rng_seed", s.seed}};
}

GenSpec gen_spec_from_json(const Json& j) {
  GenSpec s;
  if (j.contains("preset")) s = GenSpec::preset(j.at("preset").get<std::string>());
  if (j.contains("kind")) s.kind = parse_network_kind(j.at("kind").get<std::string>());
  if (j.contains("layers")) s.layers = j.at("layers").get<std::size_t>();
  if (j.contains("nodes")) s.nodes = j.at("nodes").get<std::size_t>();
  if (j.contains("communities")) s.communities = j.at("communities").get<std::size_t>();
  if (j.contains("size_mode")) s.size_mode = parse_size_mode(j.at("size_mode").get<std::string>());
  if (j.contains("p_in")) s.p_in = j.at("p_in").get<double>();
  if (j.contains("p_out")) s.p_out = j.at("p_out").get<double>();
  if (j.contains("p_cross_in")) s.p_cross_in = j.at("p_cross_in").get<double>();
  if (j.contains("p_cross_out")) s.p_cross_out = j.at("p_cross_out").get<double>();
  if (j.contains("rng_seed")) s.seed = j.at("rng_seed").get<std::uint64_t>();
  s.validate();
  return s;
}

Json to_json(const LamaConfig& c) {
  return Json{{"beta", c.beta},
              {"t", c.t},
              {"max_iter", c.max_iter},
              {"literal_eq19", c.literal_eq19},
              {"grid_size", c.grid_size},
              {"shell_edges", c.shell_edges},
              {"threshold_over_layer", c.threshold_over_layer}};
}

LamaConfig config_from_json(const Json& j) {
  LamaConfig c;
  c.beta = j.at("beta").get<double>();
  c.t = j.at("t").get<int>();
  c.max_iter = j.at("max_iter").get<int>();
  c.literal_eq19 = j.at("literal_eq19").get<bool>();
  c.grid_size = j.value("grid_size", kDefaultGridSize);
  c.shell_edges = j.value("shell_edges", true);
  c.threshold_over_layer = j.value("threshold_over_layer", true);
  c.validate();
  return c;
}

Json to_json(const Prf& p) {
  return Json{{"recall", p.recall}, {"precision", p.precision}, {"fscore", p.fscore}};
}

Prf prf_from_json(const Json& j) {
  return Prf{j.at("recall").get<double>(), j.at("precision").get<double>(),
             j.at("fscore").get<double>()};
}

Json to_json(const DatasetLayout& layout) {
  Json layers = Json::array();
  for (std::size_t w = 0; w < layout.layer_files.size(); ++w) {
    Json l{{"edges", layout.layer_files[w]}};
    if (w < layout.node_counts.size() && layout.node_counts[w] > 0) l["nodes"] = layout.node_counts[w];
    if (w < layout.label_maps.size() && !layout.label_maps[w].empty()) l["labels"] = layout.label_maps[w];
    layers.push_back(std::move(l));
  }
  Json j{{"schema_version", kSchemaVersion}, {"kind", to_string(layout.kind)}, {"layers", layers}};
  if (!layout.inter_file.empty()) j["inter"] = layout.inter_file;
  if (!layout.ground_truth_file.empty()) j["ground_truth"] = layout.ground_truth_file;
  if (layout.generator) j["generator"] = to_json(*layout.generator);
  return j;
}

DatasetLayout layout_from_json(const Json& j) {
  DatasetLayout layout;
  try {
    layout.kind = parse_network_kind(j.at("kind").get<std::string>());
    for (const Json& l : j.at("layers")) {
      layout.layer_files.push_back(l.at("edges").get<std::string>());
      layout.node_counts.push_back(l.value("nodes", std::size_t{0}));
      layout.label_maps.push_back(l.value("labels", std::string{}));
    }
    layout.inter_file = j.value("inter", std::string{});
    layout.ground_truth_file = j.value("ground_truth", std::string{});
    if (j.contains("generator")) layout.generator = gen_spec_from_json(j.at("generator"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("manifest.json: ") + e.what());
  }
  return layout;
}

Json detection_to_json(const DetectionResult& r, const LamaConfig& config) {
  auto vec = [](const NodeVector& v) {
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i) out[std::to_string(v.ids()[i])] = v.values()[i];
    return out;
  };
  Json layers = Json::array();
  for (std::size_t w = 0; w < r.communities.size(); ++w) {
    layers.push_back(Json{{"layer", w},
                          {"active", static_cast<bool>(r.active[w])},
                          {"community", r.communities[w]},
                          {"delta", r.delta[w]},
                          {"z", vec(r.z[w])},
                          {"blend", vec(r.blend[w])},
                          {"core_size", r.core_sizes[w]},
                          {"visited", r.visited_counts[w]},
                          {"adjacency_queries", r.access_counts[w]}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"seed", format_seed(r.seed)},
              {"config", to_json(config)},
              {"iterations", r.iterations_run},
              {"converged", r.converged},
              {"layers", layers},
              {"unified", vec(r.unified)},
              {"warnings", r.warnings}};
}

namespace {

Json summary_to_json(const SeedSummary& s) {
  Json layers = Json::array();
  for (const Prf& p : s.per_layer) layers.push_back(to_json(p));
  return Json{{"seed", format_seed(s.seed)},
              {"score", to_json(s.score)},
              {"per_layer", layers},
              {"community_sizes", s.community_sizes},
              {"iterations", s.iterations},
              {"converged", s.converged},
              {"seconds", s.seconds}};
}

SeedSummary seed_summary_from_json(const Json& j) {
  SeedSummary s;
  s.seed = parse_seed(j.at("seed").get<std::string>());
  s.score = prf_from_json(j.at("score"));
  for (const Json& p : j.at("per_layer")) s.per_layer.push_back(prf_from_json(p));
  s.community_sizes = j.at("community_sizes").get<std::vector<std::size_t>>();
  s.iterations = j.at("iterations").get<int>();
  s.converged = j.at("converged").get<bool>();
  s.seconds = j.at("seconds").get<double>();
  return s;
}

}  // namespace

Json to_json(const RunManifest& m) {
  Json seeds = Json::array();
  for (const auto& s : m.seeds) seeds.push_back(summary_to_json(s));
  Json j{{"schema_version", m.schema_version},
         {"command", m.command},
         {"config", to_json(m.config)},
         {"dataset", Json{{"dir", m.dataset_dir}, {"files", m.dataset_files}}},
         {"rng_seed", m.rng_seed},
         {"seed_sample", m.seed_sample ? Json(*m.seed_sample) : Json(nullptr)},
         {"threads", m.threads},
         {"seeds", seeds},
         {"aggregate", m.aggregate ? to_json(*m.aggregate) : Json(nullptr)},
         {"timings", Json{{"total_seconds", m.total_seconds}}},
         {"warnings", m.warnings}};
  return j;
}

RunManifest run_manifest_from_json(const Json& j) {
  RunManifest m;
  m.schema_version = j.at("schema_version").get<int>();
  if (m.schema_version != kSchemaVersion) {
    throw Error("unsupported schema_version " + std::to_string(m.schema_version));
  }
  m.command = j.at("command").get<std::string>();
  m.config = config_from_json(j.at("config"));
  m.dataset_dir = j.at("dataset").at("dir").get<std::string>();
  m.dataset_files = j.at("dataset").at("files").get<std::vector<std::string>>();
  m.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  if (!j.at("seed_sample").is_null()) m.seed_sample = j.at("seed_sample").get<std::size_t>();
  m.threads = j.at("threads").get<unsigned>();
  for (const Json& s : j.at("seeds")) m.seeds.push_back(seed_summary_from_json(s));
  if (!j.at("aggregate").is_null()) m.aggregate = prf_from_json(j.at("aggregate"));
  m.total_seconds = j.at("timings").at("total_seconds").get<double>();
  m.warnings = j.at("warnings").get<std::vector<std::string>>();
  return m;
}

std::vector<SeedSummary> summarize(const EvaluationReport& report) {
  std::vector<SeedSummary> out;
  out.reserve(report.seeds.size());
  for (const auto& s : report.seeds) {
    out.push_back(SeedSummary{s.seed, s.per_layer, s.score, s.community_sizes, s.iterations,
                              s.converged, s.seconds});
  }
  return out;
}

std::vector<std::string> dataset_files(const DatasetLayout& layout) {
  std::vector<std::string> out = layout.layer_files;
  for (const auto& l : layout.label_maps) {
    if (!l.empty()) out.push_back(l);
  }
  if (!layout.inter_file.empty()) out.push_back(layout.inter_file);
  if (!layout.ground_truth_file.empty()) out.push_back(layout.ground_truth_file);
  return out;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace lama::io
