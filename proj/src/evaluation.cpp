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

#include "lama/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace lama {

std::vector<NodeRef> protocol_seeds(const MultiNetwork& net, std::optional<std::size_t> sample,
                                    std::uint64_t rng_seed) {
  const std::size_t n = net.layer(0).node_count();
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  if (sample && *sample < n) {
    std::mt19937_64 rng(rng_seed);
    // Partial Fisher-Yates with raw engine output keeps the draw portable.
    for (std::size_t i = 0; i < *sample; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(nodes[i], nodes[j]);
    }
    nodes.resize(*sample);
    std::sort(nodes.begin(), nodes.end());
  }
  std::vector<NodeRef> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(NodeRef{0, v});
  return out;
}

EvaluationReport evaluate(const MultiNetwork& net, const GroundTruth& truth,
                          const LamaConfig& config, std::span<const NodeRef> seeds,
                          unsigned threads) {
  config.validate();
  if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
  const std::vector<NodeRef> gaps = truth.missing(net);
  if (!gaps.empty()) {
    std::string msg = "ground truth is missing labels for " + std::to_string(gaps.size()) + " node(s):";
    for (std::size_t i = 0; i < gaps.size() && i < 20; ++i) {
      msg += " " + std::to_string(gaps[i].layer) + ":" + std::to_string(gaps[i].node);
    }
    if (gaps.size() > 20) msg += " ...";
    throw Error(msg);
  }

  const auto start = std::chrono::steady_clock::now();
  EvaluationReport report;
  report.seeds.resize(seeds.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        const auto t0 = std::chrono::steady_clock::now();
        DetectionResult r = detect(net, seeds[i], config);
        SeedEvaluation& out = report.seeds[i];
        out.seed = seeds[i];
        out.iterations = r.iterations_run;
        out.converged = r.converged;
        for (LayerId w = 0; w < net.layer_count(); ++w) {
          out.per_layer.push_back(prf(r.communities[w], truth.truth_for(seeds[i], w)));
          out.community_sizes.push_back(r.communities[w].size());
        }
        out.score = mean(out.per_layer);
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, seeds.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Prf> per_seed;
  per_seed.reserve(report.seeds.size());
  for (const auto& s : report.seeds) per_seed.push_back(s.score);
  report.aggregate = mean(per_seed);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const char* to_string(SweepParam param) { return param == SweepParam::t ? "t" : "beta"; }

SweepParam parse_sweep_param(const std::string& text) {
  if (text == "t") return SweepParam::t;
  if (text == "beta") return SweepParam::beta;
  throw std::invalid_argument("unknown sweep parameter: " + text + " (expected t or beta)");
}

std::vector<double> default_sweep_grid(SweepParam param) {
  if (param == SweepParam::t) return {1, 3, 5, 7, 9, 11, 13, 15, 17, 19};
  return {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 0.5};
}

void validate_sweep_grid(SweepParam param, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (double v : grid) {
    const bool ok = param == SweepParam::t
                        ? std::isfinite(v) && v >= 1 && v <= 1e6 && std::floor(v) == v &&
                              static_cast<long>(v) % 2 == 1
                        : std::isfinite(v) && v > 0.0;
    if (!ok) {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
      throw std::invalid_argument(std::string("invalid grid value for ") + to_string(param) + ": " +
                                  std::string(buf, end));
    }
  }
}

std::vector<SweepPoint> sweep(const MultiNetwork& net, const GroundTruth& truth,
                              const LamaConfig& base, SweepParam param,
                              std::span<const double> grid, std::span<const NodeRef> seeds,
                              unsigned threads) {
  validate_sweep_grid(param, grid);
  std::vector<SweepPoint> out;
  for (double v : grid) {
    LamaConfig config = base;
    if (param == SweepParam::t) {
      config.t = static_cast<int>(v);
    } else {
      config.beta = v;
    }
    const EvaluationReport report = evaluate(net, truth, config, seeds, threads);
    out.push_back(SweepPoint{v, report.aggregate, report.seconds});
  }
  return out;
}

}  // namespace lama
