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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "instances.hpp"
#include "lama/consensus.hpp"
#include "lama/datagen.hpp"
#include "lama/driver.hpp"
#include "lama/evaluation.hpp"
#include "lama/objective.hpp"
#include "oracles.hpp"

using namespace lama;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

EvaluationReport evaluate_all(const GeneratedData& data, const LamaConfig& config,
                              std::optional<std::size_t> sample = std::nullopt) {
  const auto seeds = protocol_seeds(data.network, sample, 7);
  return evaluate(data.network, data.truth, config, seeds);
}

Outcome planted_recovery() {
  GenSpec spec = GenSpec::pep();
  spec.p_out = 0.0;
  const auto start = Clock::now();
  const EvaluationReport rep = evaluate_all(generate(spec), LamaConfig{});
  const double secs = seconds_since(start);
  return {rep.aggregate.fscore == 1.0 && rep.seeds.size() == 100 && secs < 5.0,
          fmt("disjoint planted communities, F = %.4f over %zu seeds (need 1.0, < 5 s)",
              rep.aggregate.fscore, rep.seeds.size())};
}

Outcome benchmark(const char* preset, double floor) {
  const auto start = Clock::now();
  const EvaluationReport rep = evaluate_all(generate(GenSpec::preset(preset)), LamaConfig{});
  const double secs = seconds_since(start);
  return {rep.aggregate.fscore >= floor && secs < 60.0,
          fmt("%s preset, F = %.4f over %zu seeds (need >= %.2f, < 60 s)", preset,
              rep.aggregate.fscore, rep.seeds.size(), floor)};
}

Outcome multi_domain() {
  const GeneratedData data = generate(GenSpec::multi_domain_toy());
  const auto start = Clock::now();
  const EvaluationReport rep = evaluate_all(data, LamaConfig{}, 50);
  LamaConfig literal;
  literal.literal_eq19 = true;
  const EvaluationReport lit = evaluate_all(data, literal, 50);
  const double secs = seconds_since(start);
  return {rep.aggregate.fscore >= 0.85 && lit.seeds.size() == 50 && secs < 60.0,
          fmt("md-toy, F = %.4f over %zu seeds (need >= 0.85); unnormalised unified update "
              "F = %.4f",
              rep.aggregate.fscore, rep.seeds.size(), lit.aggregate.fscore)};
}

Outcome descent() {
  std::mt19937_64 rng(2026);
  int sweep_bad = 0, surrogate_bad = 0, identity_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // (a) one sweep never raises the layer objective.
    const oracle::Instance in = oracle::random_instance(rng, 2 + oracle::below(rng, 9));
    const double beta = trial % 2 == 0 ? 1e-4 : oracle::uniform(rng);
    const double before = layer_objective(in.sub, in.z, in.consensus(), beta);
    const NodeVector z = sweep_update_z(in.sub, in.z, in.consensus(), beta, in.pinned);
    if (layer_objective(in.sub, z, in.consensus(), beta) > before + 1e-9) ++sweep_bad;

    // (b) unified then weight updates never raise the sum of sqrt residuals.
    const std::size_t m = 2 + oracle::below(rng, 3);
    const NodeId k = 2 + static_cast<NodeId>(oracle::below(rng, 8));
    const std::vector<NodeId> domain = oracle::range(k);
    std::vector<NodeVector> zs;
    std::vector<SparseMatrix> ps;
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<double> zw(k);
      for (auto& x : zw) x = oracle::grid_value(rng);
      zs.emplace_back(domain, zw);
      SparseMatrix p;
      for (NodeId i = 0; i < k; ++i) {
        if (w == 0 || oracle::uniform(rng) < 0.8) p.set(i, i, w == 0 ? 1.0 : oracle::uniform(rng));
      }
      ps.push_back(p);
    }
    const std::vector<bool> active(m, true);
    std::vector<double> u0(k);
    for (auto& x : u0) x = oracle::uniform(rng);
    NodeVector u(domain, u0);
    std::vector<double> delta = update_weights(u, zs, ps, active);
    const double s0 = surrogate_objective(u, zs, ps, active);
    u = update_unified(zs, delta, ps, active, domain);
    delta = update_weights(u, zs, ps, active);
    if (surrogate_objective(u, zs, ps, active) > s0 + 1e-9) ++surrogate_bad;

    // (c) the internal term equals the weighted min of the endpoints.
    for (int e = 0; e < 10; ++e) {
      const double a = oracle::uniform(rng), b = oracle::uniform(rng);
      const double wgt = 0.1 + 10.0 * oracle::uniform(rng);
      if (std::fabs(edge_terms(a, b, wgt).internal - wgt * std::min(a, b)) > 1e-12) ++identity_bad;
    }
  }
  return {sweep_bad + surrogate_bad + identity_bad == 0,
          fmt("200 random instances: sweep increases %d, surrogate increases %d, internal "
              "identity violations %d",
              sweep_bad, surrogate_bad, identity_bad)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(606);
  int path_bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::RandomPaths rp = oracle::random_paths(rng);
    const LocalInterSet locals = local_inter_from(rp.net, rp.visited);
    const LayerId n = oracle::below(rng, rp.net.layer_count());
    const StrongestPaths got = strongest_paths(locals, n, rp.visited[n]);
    const auto want = oracle::strongest_paths(locals, n, rp.visited[n]);
    for (LayerId w = 0; w < rp.net.layer_count(); ++w) {
      if (oracle::as_dense(got.matrices[w]) != want[w]) {
        ++path_bad;
        break;
      }
    }
  }
  int grid_bad = 0;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Instance in = oracle::random_instance(rng, 2 + oracle::below(rng, 4));
    std::vector<NodeId> free_nodes;
    for (NodeId v : in.nodes) {
      if (std::find(in.pinned.begin(), in.pinned.end(), v) == in.pinned.end()) free_nodes.push_back(v);
    }
    NodeVector z = in.z;
    for (int pass = 0; pass < 200; ++pass) {
      NodeVector next = sweep_update_z(in.sub, z, in.consensus(), 1e-4, in.pinned);
      if (next == z) break;
      z = next;
    }
    const double got = layer_objective(in.sub, z, in.consensus(), 1e-4);
    const double best = oracle::grid_minimum(in.sub, z, in.consensus(), 1e-4, free_nodes);
    if (got > best + 1e-9 * std::max(1.0, std::fabs(best))) {
      ++grid_bad;
      worst_gap = std::max(worst_gap, got - best);
    }
  }
  return {path_bad == 0 && grid_bad == 0,
          fmt("strongest paths differ on %d/50 instances; converged sweep above the exhaustive "
              "grid minimum on %d/50 instances (worst gap %.4g)",
              path_bad, grid_bad, worst_gap)};
}

Outcome locality() {
  const std::size_t nodes = 1000;
  const GeneratedData data = planted_community(nodes, 20, 2, 0.8, 0.001, 1);
  double worst_ratio = 0.0;
  double worst_visited = 0.0;
  double fsum = 0.0;
  const LamaConfig config;
  for (NodeId s = 0; s < 20; ++s) {
    const DetectionResult r = detect(data.network, {0, s}, config);
    double f = 0.0;
    for (LayerId w = 0; w < data.network.layer_count(); ++w) {
      std::set<NodeId> closed(r.communities[w].begin(), r.communities[w].end());
      for (NodeId v : r.communities[w]) {
        for (const Neighbor& nb : data.network.layer(w).neighbors(v)) closed.insert(nb.node);
      }
      worst_ratio = std::max(worst_ratio, static_cast<double>(r.access_counts[w]) /
                                              static_cast<double>(closed.size()));
      worst_visited = std::max(worst_visited, static_cast<double>(r.visited_counts[w]) /
                                                  static_cast<double>(nodes));
      f += prf(r.communities[w], data.truth.truth_for({0, s}, w)).fscore;
    }
    fsum += f / static_cast<double>(data.network.layer_count());
  }
  return {worst_ratio <= 5.0 && worst_visited < 0.2,
          fmt("1000 nodes, community of 20: worst queries / closed neighbourhood %.2f (need "
              "<= 5), worst visited fraction %.3f (need < 0.2), F = %.4f",
              worst_ratio, worst_visited, fsum / 20.0)};
}

// Unimodal up to `tol`: non-decreasing to the peak, non-increasing after.
bool unimodal(const std::vector<double>& f, double tol) {
  const auto peak = static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
  for (std::size_t k = 1; k <= peak; ++k) {
    if (f[k] < f[k - 1] - tol) return false;
  }
  for (std::size_t k = peak + 1; k < f.size(); ++k) {
    if (f[k] > f[k - 1] + tol) return false;
  }
  return true;
}

Outcome sweep_shape() {
  const GeneratedData data = generate(GenSpec::multi_domain_toy());
  const auto seeds = protocol_seeds(data.network, 50, 7);
  auto curve = [&](SweepParam param) {
    const std::vector<double> grid = default_sweep_grid(param);
    std::vector<double> f;
    for (const SweepPoint& p : sweep(data.network, data.truth, LamaConfig{}, param, grid, seeds)) {
      f.push_back(p.aggregate.fscore);
    }
    return f;
  };
  const std::vector<double> ft = curve(SweepParam::t);
  const std::vector<double> fb = curve(SweepParam::beta);
  const auto bpeak = static_cast<std::size_t>(std::max_element(fb.begin(), fb.end()) - fb.begin());
  const bool t_ok = unimodal(ft, 0.01);
  const bool b_ok = bpeak > 0 && bpeak + 1 < fb.size();
  std::string tline, bline;
  for (double v : ft) tline += fmt(" %.4f", v);
  for (double v : fb) bline += fmt(" %.4f", v);
  return {t_ok && b_ok, fmt("t curve%s (unimodal: %s); beta curve%s (interior peak: %s)",
                            tline.c_str(), t_ok ? "yes" : "no", bline.c_str(), b_ok ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "planted recovery", planted_recovery},
      {2, "pep benchmark", [] { return benchmark("pep", 0.95); }},
      {3, "pnp benchmark", [] { return benchmark("pnp", 0.80); }},
      {4, "multi-domain toy", multi_domain},
      {5, "descent properties", descent},
      {6, "oracle equivalence", oracle_equivalence},
      {7, "locality", locality},
      {8, "parameter sweep shape", sweep_shape},
  };
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--criterion" && k + 1 < argc) {
      selected.insert(std::atoi(argv[++k]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  bool ok = true;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    ok = ok && out.pass;
    std::printf("criterion %d %s: %s  %s  [%.2f s]\n", c.id, c.name, out.pass ? "PASS" : "FAIL",
                out.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
