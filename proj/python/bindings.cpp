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


#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lama/datagen.hpp"
#include "lama/driver.hpp"
#include "lama/evaluation.hpp"
#include "lama/io.hpp"
#include "lama/metrics.hpp"
#include "lama/multinet.hpp"
#include "lama/objective.hpp"

namespace py = pybind11;

namespace {

std::vector<lama::Edge> to_edges(const std::vector<std::tuple<lama::NodeId, lama::NodeId, double>>& raw) {
  std::vector<lama::Edge> out;
  out.reserve(raw.size());
  for (const auto& [u, v, w] : raw) out.push_back(lama::Edge{u, v, w});
  return out;
}

std::vector<lama::LayerGraph> to_layers(
    const std::vector<std::pair<std::size_t, std::vector<std::tuple<lama::NodeId, lama::NodeId, double>>>>& layers) {
  std::vector<lama::LayerGraph> out;
  for (const auto& [n, edges] : layers) {
    const auto e = to_edges(edges);
    out.push_back(lama::LayerGraph::from_edges(n, e));
  }
  return out;
}

py::dict node_vector(const lama::NodeVector& v) {
  py::dict out;
  for (std::size_t i = 0; i < v.size(); ++i) out[py::int_(v.ids()[i])] = v.values()[i];
  return out;
}

py::dict prf_dict(const lama::Prf& p) {
  py::dict d;
  d["recall"] = p.recall;
  d["precision"] = p.precision;
  d["fscore"] = p.fscore;
  return d;
}

std::vector<lama::NodeRef> to_seeds(const std::vector<std::pair<lama::LayerId, lama::NodeId>>& raw) {
  std::vector<lama::NodeRef> out;
  for (const auto& [l, n] : raw) out.push_back(lama::NodeRef{l, n});
  return out;
}

}  // namespace

PYBIND11_MODULE(_lama, m) {
  m.doc() = "Local community detection across multiple networks";

  py::register_exception<lama::Error>(m, "LamaError", PyExc_RuntimeError);

  py::enum_<lama::NetworkKind>(m, "NetworkKind")
      .value("multi_view", lama::NetworkKind::multi_view)
      .value("multi_domain", lama::NetworkKind::multi_domain);

  py::class_<lama::LamaConfig>(m, "Config")
      .def(py::init<>())
      .def_readwrite("beta", &lama::LamaConfig::beta)
      .def_readwrite("t", &lama::LamaConfig::t)
      .def_readwrite("max_iter", &lama::LamaConfig::max_iter)
      .def_readwrite("literal_eq19", &lama::LamaConfig::literal_eq19)
      .def_readwrite("grid_size", &lama::LamaConfig::grid_size)
      .def_readwrite("shell_edges", &lama::LamaConfig::shell_edges)
      .def_readwrite("threshold_over_layer", &lama::LamaConfig::threshold_over_layer)
      .def("validate", &lama::LamaConfig::validate)
      .def("__repr__", [](const lama::LamaConfig& c) {
        return "Config(" + lama::io::to_json(c).dump() + ")";
      });

  py::class_<lama::MultiNetwork>(m, "MultiNetwork")
      .def_static(
          "multi_view",
          [](const std::vector<std::pair<std::size_t, std::vector<std::tuple<lama::NodeId, lama::NodeId, double>>>>& layers) {
            return lama::MultiNetwork::multi_view(to_layers(layers));
          },
          py::arg("layers"), "layers: list of (node_count, [(u, v, weight), ...])")
      .def_static(
          "multi_domain",
          [](const std::vector<std::pair<std::size_t, std::vector<std::tuple<lama::NodeId, lama::NodeId, double>>>>& layers,
             const std::vector<std::tuple<lama::LayerId, lama::NodeId, lama::LayerId, lama::NodeId, double>>& inter) {
            std::vector<lama::InterEdge> e;
            for (const auto& [a, u, b, v, w] : inter) e.push_back(lama::InterEdge{a, u, b, v, w});
            return lama::MultiNetwork::multi_domain(to_layers(layers), e);
          },
          py::arg("layers"), py::arg("inter"))
      .def_property_readonly("kind", &lama::MultiNetwork::kind)
      .def_property_readonly("layer_count", &lama::MultiNetwork::layer_count)
      .def("node_count", [](const lama::MultiNetwork& n, lama::LayerId w) { return n.layer(w).node_count(); })
      .def("edge_count", [](const lama::MultiNetwork& n, lama::LayerId w) { return n.layer(w).edge_count(); })
      .def("edges", [](const lama::MultiNetwork& n, lama::LayerId w) {
        std::vector<std::tuple<lama::NodeId, lama::NodeId, double>> out;
        for (const auto& e : n.layer(w).edges()) out.emplace_back(e.u, e.v, e.weight);
        return out;
      })
      .def("inter_edges", [](const lama::MultiNetwork& n) {
        std::vector<std::tuple<lama::LayerId, lama::NodeId, lama::LayerId, lama::NodeId, double>> out;
        for (const auto& e : n.inter_edges()) out.emplace_back(e.layer_a, e.u, e.layer_b, e.v, e.weight);
        return out;
      });

  py::class_<lama::GroundTruth>(m, "GroundTruth")
      .def(py::init<const lama::MultiNetwork&>())
      .def("assign", py::overload_cast<lama::LayerId, lama::NodeId, const std::string&>(&lama::GroundTruth::assign))
      .def("label", [](const lama::GroundTruth& t, lama::LayerId w, lama::NodeId v) -> std::optional<std::string> {
        auto id = t.label(w, v);
        if (!id) return std::nullopt;
        return t.label_name(*id);
      })
      .def("truth_for", [](const lama::GroundTruth& t, lama::LayerId l, lama::NodeId n, lama::LayerId w) {
        return t.truth_for(lama::NodeRef{l, n}, w);
      });

  py::class_<lama::GenSpec>(m, "GenSpec")
      .def(py::init<>())
      .def_static("preset", &lama::GenSpec::preset)
      .def_property(
          "kind", [](const lama::GenSpec& s) { return s.kind; },
          [](lama::GenSpec& s, lama::NetworkKind k) { s.kind = k; })
      .def_readwrite("layers", &lama::GenSpec::layers)
      .def_readwrite("nodes", &lama::GenSpec::nodes)
      .def_readwrite("communities", &lama::GenSpec::communities)
      .def_property(
          "size_mode", [](const lama::GenSpec& s) { return std::string(lama::to_string(s.size_mode)); },
          [](lama::GenSpec& s, const std::string& v) { s.size_mode = lama::parse_size_mode(v); })
      .def_readwrite("p_in", &lama::GenSpec::p_in)
      .def_readwrite("p_out", &lama::GenSpec::p_out)
      .def_readwrite("p_cross_in", &lama::GenSpec::p_cross_in)
      .def_readwrite("p_cross_out", &lama::GenSpec::p_cross_out)
      .def_readwrite("seed", &lama::GenSpec::seed)
      .def("validate", &lama::GenSpec::validate);

  m.def(
      "generate",
      [](const lama::GenSpec& spec) {
        lama::GeneratedData d = lama::generate(spec);
        return std::make_pair(std::move(d.network), std::move(d.truth));
      },
      py::arg("spec"), "Returns (network, ground_truth).");

  m.def(
      "planted_community",
      [](std::size_t nodes, std::size_t size, std::size_t views, double p_in, double p_out,
         std::uint64_t seed) {
        lama::GeneratedData d = lama::planted_community(nodes, size, views, p_in, p_out, seed);
        return std::make_pair(std::move(d.network), std::move(d.truth));
      },
      py::arg("nodes"), py::arg("community_size"), py::arg("views"), py::arg("p_in"),
      py::arg("p_out"), py::arg("seed") = 1);

  m.def(
      "detect",
      [](const lama::MultiNetwork& net, std::pair<lama::LayerId, lama::NodeId> seed,
         const lama::LamaConfig& config) {
        lama::DetectionResult r;
        {
          py::gil_scoped_release release;
          r = lama::detect(net, lama::NodeRef{seed.first, seed.second}, config);
        }
        py::dict out;
        out["communities"] = r.communities;
        py::list z, blend;
        for (const auto& v : r.z) z.append(node_vector(v));
        for (const auto& v : r.blend) blend.append(node_vector(v));
        out["z"] = z;
        out["blend"] = blend;
        out["delta"] = r.delta;
        out["unified"] = node_vector(r.unified);
        out["iterations"] = r.iterations_run;
        out["converged"] = r.converged;
        out["adjacency_queries"] = r.access_counts;
        out["visited"] = r.visited_counts;
        out["warnings"] = r.warnings;
        return out;
      },
      py::arg("network"), py::arg("seed"), py::arg("config") = lama::LamaConfig{},
      "seed is (layer, node).");

  m.def(
      "evaluate",
      [](const lama::MultiNetwork& net, const lama::GroundTruth& truth, const lama::LamaConfig& config,
         std::optional<std::vector<std::pair<lama::LayerId, lama::NodeId>>> seeds, unsigned threads) {
        const std::vector<lama::NodeRef> s =
            seeds ? to_seeds(*seeds) : lama::protocol_seeds(net, std::nullopt, 0);
        lama::EvaluationReport rep;
        {
          py::gil_scoped_release release;
          rep = lama::evaluate(net, truth, config, s, threads);
        }
        py::dict out = prf_dict(rep.aggregate);
        py::list per_seed;
        for (const auto& e : rep.seeds) {
          py::dict d = prf_dict(e.score);
          d["seed"] = py::make_tuple(e.seed.layer, e.seed.node);
          d["community_sizes"] = e.community_sizes;
          per_seed.append(d);
        }
        out["seeds"] = per_seed;
        out["seconds"] = rep.seconds;
        return out;
      },
      py::arg("network"), py::arg("truth"), py::arg("config") = lama::LamaConfig{},
      py::arg("seeds") = py::none(), py::arg("threads") = 0u);

  m.def(
      "protocol_seeds",
      [](const lama::MultiNetwork& net, std::optional<std::size_t> sample, std::uint64_t rng_seed) {
        std::vector<std::pair<lama::LayerId, lama::NodeId>> out;
        for (const auto& s : lama::protocol_seeds(net, sample, rng_seed)) out.emplace_back(s.layer, s.node);
        return out;
      },
      py::arg("network"), py::arg("sample") = py::none(), py::arg("rng_seed") = 1);

  m.def(
      "sweep",
      [](const lama::MultiNetwork& net, const lama::GroundTruth& truth, const std::string& param,
         std::optional<std::vector<double>> grid, const lama::LamaConfig& base,
         std::optional<std::vector<std::pair<lama::LayerId, lama::NodeId>>> seeds, unsigned threads) {
        const lama::SweepParam p = lama::parse_sweep_param(param);
        const std::vector<double> g = grid ? *grid : lama::default_sweep_grid(p);
        const std::vector<lama::NodeRef> s =
            seeds ? to_seeds(*seeds) : lama::protocol_seeds(net, std::nullopt, 0);
        std::vector<lama::SweepPoint> points;
        {
          py::gil_scoped_release release;
          points = lama::sweep(net, truth, base, p, g, s, threads);
        }
        std::vector<std::pair<double, double>> out;
        for (const auto& pt : points) out.emplace_back(pt.value, pt.aggregate.fscore);
        return out;
      },
      py::arg("network"), py::arg("truth"), py::arg("param"), py::arg("grid") = py::none(),
      py::arg("config") = lama::LamaConfig{}, py::arg("seeds") = py::none(), py::arg("threads") = 0u,
      "Returns [(value, fscore), ...].");

  m.def(
      "prf",
      [](std::vector<lama::NodeId> community, std::vector<lama::NodeId> truth) {
        return prf_dict(lama::prf(community, truth));
      },
      py::arg("community"), py::arg("truth"));

  m.def("quality_ratio", &lama::quality_ratio, py::arg("external"), py::arg("internal"));

  m.def(
      "load_dataset",
      [](const std::filesystem::path& dir) {
        lama::io::Dataset ds = lama::io::load_dataset(dir);
        return std::make_pair(std::move(ds.network), std::move(ds.truth));
      },
      py::arg("dir"), "Returns (network, ground_truth or None).");

  m.def(
      "save_dataset",
      [](const std::filesystem::path& dir, const lama::MultiNetwork& net, const lama::GroundTruth& truth) {
        lama::io::save_dataset(dir, lama::GeneratedData{net, truth}, nullptr);
      },
      py::arg("dir"), py::arg("network"), py::arg("truth"));
}
