#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mak/bench.h"
#include "mak/dispatch.h"
#include "mak/errors.h"
#include "mak/generators.h"
#include "mak/io.h"
#include "mak/oracle.h"
#include "mak/profiles.h"

namespace py = pybind11;

namespace {

py::list ItemIds(const mak::Instance& instance, const std::vector<int>& items) {
  py::list ids;
  for (int p : items) ids.append(instance.item_id(p));
  return ids;
}

py::object VoterIds(const mak::Instance& instance,
                    const std::optional<std::vector<int>>& order) {
  if (!order) return py::none();
  py::list ids;
  for (int v : *order) ids.append(instance.voter_id(v));
  return ids;
}

py::object ItemOrderIds(const mak::Instance& instance,
                        const std::optional<std::vector<int>>& order) {
  if (!order) return py::none();
  return ItemIds(instance, *order);
}

py::dict ReportDict(const mak::Instance& instance,
                    const mak::SolveReport& report) {
  py::dict out;
  out["algorithm"] = std::string(mak::AlgorithmName(report.algorithm));
  out["indexing"] = report.indexing;
  out["value"] = report.value;
  if (report.witness) {
    out["bundle"] = ItemIds(instance, report.witness->items);
    out["cost"] = report.witness->cost;
  } else {
    out["bundle"] = py::none();
    out["cost"] = py::none();
  }
  out["meets_target"] = report.meets_target;
  out["epsilon"] = report.epsilon
                       ? py::object(py::str(mak::FormatRational(*report.epsilon)))
                       : py::object(py::none());
  out["states"] = report.states;
  out["reason"] = report.reason;
  return out;
}

mak::Caps CapsFromDict(const py::dict& overrides) {
  mak::Caps caps;
  for (const auto& [key, value] : overrides) {
    const std::string name = py::cast<std::string>(key);
    const auto v = py::cast<std::uint64_t>(value);
    if (name == "oracle_max_items") caps.oracle_max_items = static_cast<int>(v);
    else if (name == "sc_detect_max_voters") caps.sc_detect_max_voters = static_cast<int>(v);
    else if (name == "wmsc_max_cells") caps.wmsc_max_cells = v;
    else if (name == "xp_max_guesses") caps.xp_max_guesses = v;
    else if (name == "xp_max_cells") caps.xp_max_cells = v;
    else if (name == "matching_max_voters") caps.matching_max_voters = static_cast<int>(v);
    else if (name == "matching_max_k") caps.matching_max_k = static_cast<int>(v);
    else if (name == "matching_max_guesses") caps.matching_max_guesses = v;
    else if (name == "matching_max_cells") caps.matching_max_cells = v;
    else if (name == "polymul_max_voters") caps.polymul_max_voters = static_cast<int>(v);
    else if (name == "polymul_max_cells") caps.polymul_max_cells = v;
    else if (name == "kpcover_max_cells") caps.kpcover_max_cells = v;
    else if (name == "dp_max_cells") caps.dp_max_cells = v;
    else throw mak::InputError("unknown cap '" + name + "'");
  }
  return caps;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiagent knapsack solvers";

  static py::exception<mak::InputError> input_error(m, "InputError",
                                                    PyExc_ValueError);
  static py::exception<mak::SizeError> size_error(m, "SizeError",
                                                  PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mak::SizeError& e) {
      py::set_error(size_error, e.what());
    } catch (const mak::InputError& e) {
      py::set_error(input_error, e.what());
    }
  });

  py::class_<mak::Instance>(m, "Instance")
      .def_static("from_json",
                  [](const std::string& text) { return mak::ParseInstance(text); },
                  py::arg("text"))
      .def_static("read", &mak::ReadInstanceFile, py::arg("path"))
      .def("to_json", &mak::SerializeInstance)
      .def("write",
           [](const mak::Instance& self, const std::string& path) {
             mak::WriteInstanceFile(path, self);
           },
           py::arg("path"))
      .def_property_readonly("num_items", &mak::Instance::num_items)
      .def_property_readonly("num_voters", &mak::Instance::num_voters)
      .def_property_readonly("budget", &mak::Instance::budget)
      .def_property_readonly("lambda_", &mak::Instance::lambda)
      .def_property_readonly("rule", [](const mak::Instance& self) {
        return std::string(mak::RuleName(self.rule()));
      })
      .def_property_readonly("item_ids", [](const mak::Instance& self) {
        return self.data().item_ids;
      })
      .def_property_readonly("voter_ids", [](const mak::Instance& self) {
        return self.data().voter_ids;
      })
      .def_property_readonly("costs", [](const mak::Instance& self) {
        return self.data().costs;
      })
      .def_property_readonly("utils", [](const mak::Instance& self) {
        return self.data().utils;
      })
      .def("__eq__", [](const mak::Instance& a, const mak::Instance& b) {
        return a == b;
      })
      .def("__repr__", [](const mak::Instance& self) {
        return "<Instance n=" + std::to_string(self.num_voters()) +
               " m=" + std::to_string(self.num_items()) +
               " rule=" + std::string(mak::RuleName(self.rule())) + ">";
      });

  m.def(
      "generate",
      [](const std::string& kind, int num_voters, int num_items,
         mak::Value max_util, mak::Value max_cost, mak::Value budget,
         const std::string& rule, int lambda, std::uint64_t seed) {
        return mak::Generate({.kind = mak::ParseGeneratorKind(kind),
                              .num_voters = num_voters,
                              .num_items = num_items,
                              .max_util = max_util,
                              .max_cost = max_cost,
                              .budget = budget,
                              .rule = mak::ParseRule(rule),
                              .lambda = lambda,
                              .seed = seed});
      },
      py::arg("kind") = "general", py::arg("num_voters") = 3,
      py::arg("num_items") = 5, py::arg("max_util") = 6,
      py::arg("max_cost") = 5, py::arg("budget") = 10,
      py::arg("rule") = "diverse", py::arg("lambda_") = 1,
      py::arg("seed") = 1);

  m.def(
      "solve",
      [](const mak::Instance& instance, const std::string& algorithm,
         const std::string& epsilon, const std::string& indexing,
         const py::dict& caps) {
        mak::SolveOptions options;
        options.algorithm = mak::ParseAlgorithm(algorithm);
        options.epsilon = mak::ParseRational(epsilon);
        options.indexing = indexing;
        options.caps = CapsFromDict(caps);
        mak::SolveReport report;
        {
          py::gil_scoped_release release;
          report = mak::Solve(instance, options);
        }
        return ReportDict(instance, report);
      },
      py::arg("instance"), py::arg("algorithm") = "auto",
      py::arg("epsilon") = "1/2", py::arg("indexing") = "",
      py::arg("caps") = py::dict());

  m.def(
      "brute_force",
      [](const mak::Instance& instance) {
        const mak::Solution solution = mak::BruteForceSolve(instance);
        py::dict out;
        out["value"] = solution.bundle.value;
        out["bundle"] = ItemIds(instance, solution.bundle.items);
        out["cost"] = solution.bundle.cost;
        return out;
      },
      py::arg("instance"));

  m.def(
      "analyze",
      [](const mak::Instance& instance) {
        const mak::ProfileReport report = mak::AnalyzeProfile(instance);
        py::dict out;
        out["unanimous"] = report.is_unanimous;
        out["strongly_unanimous"] = report.is_strongly_unanimous;
        out["distance"] = report.distance_d;
        out["sc_order"] = VoterIds(instance, report.sc_order);
        out["sp_axis"] = ItemOrderIds(instance, report.sp_axis);
        out["sc_order_verified"] = report.sc_order_verified;
        out["sp_axis_verified"] = report.sp_axis_verified;
        out["sc_detection_ran"] = report.sc_detection_ran;
        return out;
      },
      py::arg("instance"));

  m.def(
      "merge_identical_voters",
      [](const mak::Instance& instance) {
        return mak::MergeIdenticalVoters(instance).instance;
      },
      py::arg("instance"));

  m.def(
      "bench_csv",
      [](std::uint64_t seed, int per_cell, int max_voters, int max_items,
         const std::string& counterexample_dir) {
        mak::BenchConfig config;
        config.seed = seed;
        config.instances_per_cell = per_cell;
        config.max_voters = max_voters;
        config.max_items = max_items;
        config.counterexample_dir = counterexample_dir;
        mak::BenchResult result;
        {
          py::gil_scoped_release release;
          result = mak::RunBench(mak::DefaultSuite(config), config);
        }
        std::ostringstream csv;
        mak::WriteBenchCsv(result, csv);
        return py::make_tuple(csv.str(), result.disagreements);
      },
      py::arg("seed") = 1, py::arg("per_cell") = 1, py::arg("max_voters") = 3,
      py::arg("max_items") = 4, py::arg("counterexample_dir") = ".");
}
