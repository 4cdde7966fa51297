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


// lama: generate datasets, run detection, evaluate and sweep parameters.

#include <charconv>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lama/datagen.hpp"
#include "lama/driver.hpp"
#include "lama/evaluation.hpp"
#include "lama/io.hpp"

namespace {

using lama::io::Json;
namespace fs = std::filesystem;

struct ConfigFlags {
  lama::LamaConfig config;
  bool no_shell_edges = false;
  bool visited_threshold = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--beta", config.beta, "Regularisation weight")->capture_default_str();
    cmd->add_option("--t", config.t, "Seeds mapped into each other domain (odd)")
        ->capture_default_str();
    cmd->add_option("--max-iter", config.max_iter, "Maximum outer iterations")
        ->capture_default_str();
    cmd->add_flag("--literal-eq19", config.literal_eq19,
                  "Unified update without normalisation by the weight sum");
    cmd->add_flag("--no-shell-edges", no_shell_edges,
                  "Ignore edges between two shell nodes");
    cmd->add_flag("--visited-threshold", visited_threshold,
                  "Final threshold is the mean over visited nodes only");
  }

  lama::LamaConfig resolve() const {
    lama::LamaConfig c = config;
    c.shell_edges = !no_shell_edges;
    c.threshold_over_layer = !visited_threshold;
    c.validate();
    return c;
  }
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    lama::io::write_text(out, text);
  }
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

const lama::GroundTruth& require_truth(const lama::io::Dataset& ds) {
  if (!ds.truth) throw lama::Error(ds.dir.string() + ": dataset has no ground truth file");
  return *ds.truth;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "lama: warning: " << w << "\n";
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  std::string preset;
  std::string spec_file;
  std::optional<std::uint64_t> rng_seed;
  std::optional<double> p_in;
  std::optional<double> p_out;
  std::string out;
};

int run_gen(const GenArgs& a) {
  lama::GenSpec spec;
  if (!a.spec_file.empty()) {
    spec = lama::io::gen_spec_from_json(Json::parse(lama::io::read_text(a.spec_file)));
  } else {
    spec = lama::GenSpec::preset(a.preset.empty() ? "pep" : a.preset);
  }
  if (a.rng_seed) spec.seed = *a.rng_seed;
  if (a.p_in) spec.p_in = *a.p_in;
  if (a.p_out) spec.p_out = *a.p_out;
  spec.validate();
  const lama::GeneratedData data = lama::generate(spec);
  lama::io::save_dataset(a.out, data, &spec);
  std::size_t edges = 0;
  for (const auto& g : data.network.layers()) edges += g.edge_count();
  std::cout << "wrote " << a.out << ": " << data.network.layer_count() << " layers, "
            << edges << " intra-layer edges, " << data.network.inter_edges().size()
            << " inter-layer edges\n";
  return 0;
}

// detect ---------------------------------------------------------------------

struct DetectArgs {
  std::string data;
  std::string seed;
  std::string out;
};

int run_detect(const DetectArgs& a, const ConfigFlags& flags) {
  const lama::LamaConfig config = flags.resolve();
  const lama::io::Dataset ds = lama::io::load_dataset(a.data);
  print_warnings(ds.warnings);
  const lama::NodeRef seed = lama::io::parse_seed(a.seed);
  const lama::DetectionResult result = lama::detect(ds.network, seed, config);
  print_warnings(result.warnings);
  Json j = lama::io::detection_to_json(result, config);
  j["dataset_dir"] = ds.dir.string();
  emit(a.out, j.dump(2) + "\n");
  return 0;
}

// eval -----------------------------------------------------------------------

struct EvalArgs {
  std::string data;
  std::optional<std::size_t> seeds;
  std::uint64_t rng_seed = 1;
  unsigned threads = 0;
  std::string out;
  std::string replay;
  bool quiet = false;
};

int run_eval(EvalArgs a, const ConfigFlags& flags, const std::string& invocation) {
  lama::LamaConfig config = flags.resolve();
  if (!a.replay.empty()) {
    const lama::io::RunManifest m =
        lama::io::run_manifest_from_json(Json::parse(lama::io::read_text(a.replay)));
    config = m.config;
    if (a.data.empty()) a.data = m.dataset_dir;
    a.seeds = m.seed_sample;
    a.rng_seed = m.rng_seed;
  }
  if (a.data.empty()) throw std::invalid_argument("--data is required");
  const lama::io::Dataset ds = lama::io::load_dataset(a.data);
  print_warnings(ds.warnings);
  const lama::GroundTruth& truth = require_truth(ds);
  const std::vector<lama::NodeRef> seeds = lama::protocol_seeds(ds.network, a.seeds, a.rng_seed);
  const lama::EvaluationReport report = lama::evaluate(ds.network, truth, config, seeds, a.threads);

  if (!a.quiet) {
    std::cout << "seed\trecall\tprecision\tfscore\n";
    for (const auto& s : report.seeds) {
      std::cout << lama::io::format_seed(s.seed) << "\t" << fixed4(s.score.recall) << "\t"
                << fixed4(s.score.precision) << "\t" << fixed4(s.score.fscore) << "\n";
    }
  }
  std::cout << "aggregate\t" << fixed4(report.aggregate.recall) << "\t"
            << fixed4(report.aggregate.precision) << "\t" << fixed4(report.aggregate.fscore)
            << "\n";
  std::cerr << seeds.size() << " seeds in " << fixed4(report.seconds) << " s\n";

  if (!a.out.empty()) {
    lama::io::RunManifest m;
    m.command = invocation;
    m.config = config;
    m.dataset_dir = fs::absolute(ds.dir).lexically_normal().string();
    m.dataset_files = lama::io::dataset_files(ds.layout);
    m.rng_seed = a.rng_seed;
    m.seed_sample = a.seeds;
    m.threads = a.threads;
    m.seeds = lama::io::summarize(report);
    m.aggregate = report.aggregate;
    m.total_seconds = report.seconds;
    m.warnings = ds.warnings;
    lama::io::write_text(a.out, lama::io::to_json(m).dump(2) + "\n");
  }
  return 0;
}

// sweep ----------------------------------------------------------------------

struct SweepArgs {
  std::string data;
  std::string param;
  std::string grid;
  std::optional<std::size_t> seeds;
  std::uint64_t rng_seed = 1;
  unsigned threads = 0;
  std::string out;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("invalid grid value: '" + item + "'");
    }
    grid.push_back(v);
  }
  return grid;
}

std::string format_value(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

int run_sweep(const SweepArgs& a, const ConfigFlags& flags) {
  const lama::LamaConfig base = flags.resolve();
  const lama::SweepParam param = lama::parse_sweep_param(a.param);
  const std::vector<double> grid =
      a.grid.empty() ? lama::default_sweep_grid(param) : parse_grid(a.grid);
  lama::validate_sweep_grid(param, grid);
  const lama::io::Dataset ds = lama::io::load_dataset(a.data);
  print_warnings(ds.warnings);
  const lama::GroundTruth& truth = require_truth(ds);
  const std::vector<lama::NodeRef> seeds = lama::protocol_seeds(ds.network, a.seeds, a.rng_seed);
  const auto points = lama::sweep(ds.network, truth, base, param, grid, seeds, a.threads);
  std::ostringstream tsv;
  tsv << lama::to_string(param) << "\trecall\tprecision\tfscore\tseconds\n";
  for (const auto& p : points) {
    tsv << format_value(p.value) << "\t" << fixed4(p.aggregate.recall) << "\t"
        << fixed4(p.aggregate.precision) << "\t" << fixed4(p.aggregate.fscore) << "\t"
        << fixed4(p.seconds) << "\n";
  }
  emit(a.out, tsv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local community detection across multiple networks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a planted-partition dataset");
  auto* preset_opt = gen_cmd->add_option("--preset", gen.preset, "pep, pnp or md-toy");
  gen_cmd->add_option("--spec", gen.spec_file, "Generator spec JSON")
      ->check(CLI::ExistingFile)
      ->excludes(preset_opt);
  gen_cmd->add_option("--rng-seed", gen.rng_seed, "Override the generator seed");
  gen_cmd->add_option("--p-in", gen.p_in, "Override the intra-community probability");
  gen_cmd->add_option("--p-out", gen.p_out, "Override the inter-community probability");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  DetectArgs det;
  ConfigFlags det_flags;
  auto* det_cmd = app.add_subcommand("detect", "Detect the communities of one seed");
  det_cmd->add_option("--data", det.data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  det_cmd->add_option("--seed", det.seed, "Seed as layer:node")->required();
  det_cmd->add_option("--out", det.out, "Result JSON (default stdout)");
  det_flags.attach(det_cmd);

  EvalArgs ev;
  ConfigFlags ev_flags;
  auto* ev_cmd = app.add_subcommand("eval", "Score every (or a sample of) seed against ground truth");
  ev_cmd->add_option("--data", ev.data, "Dataset directory");
  ev_cmd->add_option("--seeds", ev.seeds, "Sample this many seeds");
  ev_cmd->add_option("--rng-seed", ev.rng_seed, "Seed sampling rng")->capture_default_str();
  ev_cmd->add_option("--threads", ev.threads, "Worker threads (0 = all cores)")->capture_default_str();
  ev_cmd->add_option("--out", ev.out, "Run manifest JSON");
  ev_cmd->add_option("--replay", ev.replay, "Rerun the configuration of a run manifest")
      ->check(CLI::ExistingFile);
  ev_cmd->add_flag("--quiet", ev.quiet, "Print the aggregate row only");
  ev_flags.attach(ev_cmd);

  SweepArgs sw;
  ConfigFlags sw_flags;
  auto* sw_cmd = app.add_subcommand("sweep", "Aggregate fscore over a grid of t or beta");
  sw_cmd->add_option("--data", sw.data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  sw_cmd->add_option("--param", sw.param, "t or beta")->required();
  sw_cmd->add_option("--grid", sw.grid, "Comma-separated values (default: the standard grid)");
  sw_cmd->add_option("--seeds", sw.seeds, "Sample this many seeds");
  sw_cmd->add_option("--rng-seed", sw.rng_seed, "Seed sampling rng")->capture_default_str();
  sw_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sw_cmd->add_option("--out", sw.out, "Output TSV (default stdout)");
  sw_flags.attach(sw_cmd);

  CLI11_PARSE(app, argc, argv);

  std::string invocation = "lama";
  for (int i = 1; i < argc; ++i) invocation += std::string(" ") + argv[i];

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*det_cmd) return run_detect(det, det_flags);
    if (*ev_cmd) return run_eval(ev, ev_flags, invocation);
    if (*sw_cmd) return run_sweep(sw, sw_flags);
  } catch (const std::exception& e) {
    std::cerr << "lama: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
