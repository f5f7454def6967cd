// Copyright 2026 The famtree authors
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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "famtree/engine.hpp"
#include "famtree/experiment.hpp"
#include "famtree/label.hpp"
#include "famtree/limit_laws.hpp"
#include "famtree/model.hpp"
#include "famtree/rng.hpp"
#include "famtree/special.hpp"
#include "famtree/stats.hpp"
#include "famtree/urn.hpp"
#include "famtree/validate.hpp"

namespace py = pybind11;

using namespace famtree;

namespace {

ModelKind make_model(const std::string& name, double beta) {
  return ModelKind::from_name(name, beta);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "random family trees with preferential attachment";

  py::class_<Label>(m, "Label")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_label(text); }))
      .def(py::init<std::vector<std::uint32_t>>())
      .def_readonly("path", &Label::path)
      .def_property_readonly("is_root", &Label::is_root)
      .def_property_readonly("depth", &Label::depth)
      .def("parent", &Label::parent)
      .def("child", &Label::child)
      .def("__str__", &format_label)
      .def("__repr__",
           [](const Label& l) { return "Label('" + format_label(l) + "')"; })
      .def("__eq__", [](const Label& a, const Label& b) { return a == b; })
      .def("__hash__", [](const Label& l) {
        std::size_t h = 0;
        for (std::uint32_t c : l.path) h = h * 1000003u + c;
        return h;
      });

  py::class_<ModelKind>(m, "ModelKind")
      .def_static("linear_degree", &ModelKind::linear_degree, py::arg("beta"))
      .def_static("gport", &ModelKind::gport, py::arg("beta"))
      .def_readonly("beta", &ModelKind::beta)
      .def_property_readonly("name",
                             [](const ModelKind& k) {
                               return std::string(to_string(k.variant));
                             })
      .def_property_readonly("scaling_exponent", &ModelKind::scaling_exponent)
      .def("__repr__", [](const ModelKind& k) {
        std::ostringstream os;
        os << "ModelKind(" << to_string(k.variant) << ", beta=" << k.beta
           << ")";
        return os.str();
      });
  m.def("model", &make_model, py::arg("name"), py::arg("beta"),
        "build a ModelKind from 'linear' or 'port' plus beta");

  py::class_<TrajectoryTable>(m, "TrajectoryTable")
      .def_readonly("labels", &TrajectoryTable::labels)
      .def_readonly("checkpoints", &TrajectoryTable::checkpoints)
      .def_readonly("degrees", &TrajectoryTable::degrees)
      .def("at", &TrajectoryTable::at, py::arg("checkpoint"), py::arg("label"));

  py::class_<ColoringSnapshot>(m, "ColoringSnapshot")
      .def_readonly("active", &ColoringSnapshot::active)
      .def_readonly("activation_step", &ColoringSnapshot::activation_step)
      .def_readonly("parent_increments", &ColoringSnapshot::parent_increments)
      .def_readonly("parent_white", &ColoringSnapshot::parent_white)
      .def_readonly("parent_black", &ColoringSnapshot::parent_black)
      .def_readonly("child_white", &ColoringSnapshot::child_white)
      .def_readonly("child_black", &ColoringSnapshot::child_black)
      .def_property_readonly("parent_fraction",
                             &ColoringSnapshot::parent_fraction);

  py::class_<GrowthRun>(m, "GrowthRun")
      .def(py::init<ModelKind, std::uint64_t>(), py::arg("model"),
           py::arg("seed"))
      .def("step", &GrowthRun::step)
      .def("grow_to", &GrowthRun::grow_to, py::arg("n"))
      .def_property_readonly("n", &GrowthRun::n)
      .def("watch", &GrowthRun::watch)
      .def("degree_of", &GrowthRun::degree_of)
      .def("enable_coloring", &GrowthRun::enable_coloring, py::arg("parent"),
           py::arg("child_index"))
      .def_property_readonly("coloring", &GrowthRun::coloring)
      .def("reserve", &GrowthRun::reserve)
      .def_property_readonly("memory_footprint",
                             &GrowthRun::memory_footprint);

  m.def(
      "grow",
      [](const ModelKind& model, std::uint64_t n, std::uint64_t seed,
         const std::vector<Label>& watched,
         const std::vector<std::uint64_t>& checkpoints) {
        std::vector<std::uint64_t> cps =
            checkpoints.empty() ? std::vector<std::uint64_t>{n} : checkpoints;
        return grow(model, n, seed, watched, cps);
      },
      py::arg("model"), py::arg("n"), py::arg("seed"), py::arg("watched"),
      py::arg("checkpoints") = std::vector<std::uint64_t>{},
      "grow one tree, recording watched-label degrees at each checkpoint");

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("model", &ExperimentConfig::model)
      .def_readwrite("n", &ExperimentConfig::n)
      .def_readwrite("reps", &ExperimentConfig::reps)
      .def_readwrite("watched", &ExperimentConfig::watched)
      .def_readwrite("checkpoints", &ExperimentConfig::checkpoints)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("threads", &ExperimentConfig::threads);

  py::class_<GrowTable>(m, "GrowTable")
      .def_readonly("labels", &GrowTable::labels)
      .def_readonly("checkpoints", &GrowTable::checkpoints)
      .def_readonly("reps", &GrowTable::reps)
      .def("at", &GrowTable::at, py::arg("rep"), py::arg("checkpoint"),
           py::arg("label"))
      .def("normalized", &GrowTable::normalized, py::arg("rep"),
           py::arg("checkpoint"), py::arg("label"))
      .def("normalized_column", &GrowTable::normalized_column,
           py::arg("checkpoint"), py::arg("label"));

  m.def("run_grow", &run_grow, py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "replicated growth runs; replicate r uses the stream derived from "
        "(seed, r)");
  m.def("grow_summary_json", &grow_summary_json, py::arg("table"),
        py::arg("max_moment") = 4,
        py::arg("ks_reference_reps") = std::uint64_t{200000});
  m.def("geometric_checkpoints", &geometric_checkpoints, py::arg("n_first"),
        py::arg("n_last"), py::arg("ratio"));

  py::class_<UrnState>(m, "UrnState")
      .def(py::init<double, double>(), py::arg("white"), py::arg("black"))
      .def_readwrite("white", &UrnState::white)
      .def_readwrite("black", &UrnState::black)
      .def_property_readonly("white_fraction", &UrnState::white_fraction);

  py::class_<ReplacementMatrix>(m, "ReplacementMatrix")
      .def(py::init<double, double, double, double>(), py::arg("a"),
           py::arg("b"), py::arg("c"), py::arg("d"));

  py::class_<UrnTrajectory>(m, "UrnTrajectory")
      .def_readonly("checkpoints", &UrnTrajectory::checkpoints)
      .def_readonly("white", &UrnTrajectory::white)
      .def_readonly("black", &UrnTrajectory::black);

  m.def("polya_run", &polya_run, py::arg("initial"), py::arg("s"),
        py::arg("draws"), py::arg("seed"),
        py::arg("checkpoints") = std::vector<std::uint64_t>{});
  m.def("generalized_run", &generalized_run, py::arg("initial"),
        py::arg("matrix"), py::arg("draws"), py::arg("seed"),
        py::arg("checkpoints") = std::vector<std::uint64_t>{});
  m.def("polya_final_fraction", &polya_final_fraction, py::arg("initial"),
        py::arg("s"), py::arg("draws"), py::arg("seed"));

  py::class_<BetaFactor>(m, "BetaFactor")
      .def_readonly("a", &BetaFactor::a)
      .def_readonly("b", &BetaFactor::b)
      .def_property_readonly("degenerate", &BetaFactor::degenerate)
      .def("moment", &BetaFactor::moment, py::arg("k"));

  py::class_<LimitLaw>(m, "LimitLaw")
      .def_static("for_label", &LimitLaw::for_label, py::arg("label"),
                  py::arg("model"))
      .def_readonly("exponent", &LimitLaw::exponent)
      .def_readonly("factors", &LimitLaw::factors);

  m.def("zeta0_moment", &zeta0_moment, py::arg("k"), py::arg("model"));
  m.def("limit_moment", &limit_moment, py::arg("label"), py::arg("k"),
        py::arg("model"));
  m.def("has_closed_form_root", &has_closed_form_root, py::arg("model"));
  m.def("root_limit_cdf", &root_limit_cdf, py::arg("model"), py::arg("t"));
  m.def("port_martingale_value", &port_martingale_value, py::arg("degree"),
        py::arg("n"), py::arg("k"), py::arg("beta"));

  py::class_<ExactDistribution>(m, "ExactDistribution")
      .def_readonly("pmf", &ExactDistribution::pmf)
      .def_property_readonly("mean", &ExactDistribution::mean)
      .def("probability", &ExactDistribution::probability, py::arg("degree"));

  m.def("enumerate_exact", &enumerate_exact, py::arg("label"), py::arg("n"),
        py::arg("model"),
        "exact degree law of a label by enumerating growth histories, n <= 9");

  py::class_<MomentEstimate>(m, "MomentEstimate")
      .def_readonly("k", &MomentEstimate::k)
      .def_readonly("value", &MomentEstimate::value)
      .def_readonly("std_error", &MomentEstimate::std_error);

  m.def("empirical_moment",
        [](const std::vector<double>& sample, unsigned k) {
          return empirical_moment(sample, k);
        },
        py::arg("sample"), py::arg("k"));

  py::class_<KsResult>(m, "KsResult")
      .def_readonly("distance", &KsResult::distance)
      .def_readonly("n", &KsResult::n)
      .def_readonly("m", &KsResult::m);

  m.def("ks_one_sample",
        [](const std::vector<double>& sample,
           const std::function<double(double)>& cdf) {
          return ks_one_sample(sample, cdf);
        },
        py::arg("sample"), py::arg("cdf"));
  m.def("ks_two_sample",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return ks_two_sample(a, b);
        },
        py::arg("a"), py::arg("b"));

  m.def("beta_cdf", &beta_cdf, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("mix64", &mix64, py::arg("x"));
  m.def("derive_stream_seed", &derive_stream_seed, py::arg("master"),
        py::arg("index"));

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &RandomStream::uniform)
      .def("normal", &RandomStream::normal)
      .def("exponential", &RandomStream::exponential);

  py::class_<ValidateOptions>(m, "ValidateOptions")
      .def(py::init<>())
      .def_readwrite("seed", &ValidateOptions::seed)
      .def_readwrite("threads", &ValidateOptions::threads)
      .def_readwrite("quick", &ValidateOptions::quick);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("passed", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail)
      .def_readonly("seconds", &CriterionResult::seconds);

  py::class_<ValidateReport>(m, "ValidateReport")
      .def_readonly("criteria", &ValidateReport::criteria)
      .def_property_readonly("all_pass", &ValidateReport::all_pass);

  m.def("run_validate", &run_validate, py::arg("options"),
        py::call_guard<py::gil_scoped_release>());

  m.def("parse_label", &parse_label, py::arg("text"));
  m.def("format_label", &format_label, py::arg("label"));
}
