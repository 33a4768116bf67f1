#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "banpar/census.hpp"
#include "banpar/families.hpp"
#include "banpar/fixedpoints.hpp"
#include "banpar/io.hpp"
#include "banpar/network.hpp"
#include "banpar/parallelize.hpp"
#include "banpar/schedule.hpp"

namespace py = pybind11;
using namespace banpar;

namespace {

std::vector<std::string> rule_strings(const AffineUnaryNetwork& net) {
  std::vector<std::string> out;
  out.reserve(net.size());
  for (const auto& r : net.rules) out.push_back(r.to_string());
  return out;
}

HhatVariant variant_from(const std::string& name) {
  if (name == "standard") return HhatVariant::standard;
  if (name == "positive") return HhatVariant::positive;
  throw std::invalid_argument("variant must be 'standard' or 'positive'");
}

py::dict census_to_dict(const CycleCensus& result) {
  py::dict bins;
  for (auto [c, count] : result.bins) bins[py::int_(c)] = count;
  py::dict out;
  out["n"] = result.n;
  out["bins"] = bins;
  out["total"] = result.total;
  out["elapsed_seconds"] = result.elapsed_seconds;
  if (!result.witnesses.empty()) {
    py::dict witnesses;
    for (const auto& [c, text] : result.witnesses) witnesses[py::int_(c)] = text;
    out["witnesses"] = witnesses;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boolean automata networks under block-parallel update schedules";

  py::class_<AffineUnaryNetwork>(m, "AffineUnaryNetwork")
      .def_property_readonly("n", &AffineUnaryNetwork::size)
      .def_property_readonly("rules", &rule_strings)
      .def("interaction_dot",
           [](const AffineUnaryNetwork& net) { return to_dot(interaction_graph(net)); })
      .def("to_truth_tables", &to_truth_tables)
      .def("__eq__", [](const AffineUnaryNetwork& a, const AffineUnaryNetwork& b) { return a == b; })
      .def("__repr__", [](const AffineUnaryNetwork& net) {
        std::string r = "AffineUnaryNetwork([";
        for (std::uint32_t i = 0; i < net.size(); ++i)
          r += (i ? ", " : "") + net.rules[i].to_string();
        return r + "])";
      });

  py::class_<TruthTableNetwork>(m, "TruthTableNetwork")
      .def_property_readonly("n", [](const TruthTableNetwork& net) { return net.n; })
      .def("to_json", &network_to_json)
      .def(
          "to_unary",
          [](const TruthTableNetwork& net) {
            std::uint32_t offender = 0;
            auto view = affine_unary_view(net, &offender);
            if (!view)
              throw py::value_error("rule " + std::to_string(offender) +
                                    " has more than one essential input");
            return *view;
          },
          "Equivalent unary network; raises ValueError when a rule has two or more essential "
          "inputs.")
      .def("interaction_dot",
           [](const TruthTableNetwork& net) { return to_dot(interaction_graph(net)); })
      .def("__eq__", [](const TruthTableNetwork& a, const TruthTableNetwork& b) { return a == b; })
      .def("__repr__", [](const TruthTableNetwork& net) {
        return "TruthTableNetwork(n=" + std::to_string(net.n) + ")";
      });

  py::class_<PartitionedOrder>(m, "PartitionedOrder")
      .def_property_readonly("oblocks",
                             [](const PartitionedOrder& mu) { return mu.oblocks; })
      .def("has_repetitions", &has_repetitions)
      .def("__eq__", [](const PartitionedOrder& a, const PartitionedOrder& b) { return a == b; })
      .def("__str__", &format_partitioned_order)
      .def("__repr__",
           [](const PartitionedOrder& mu) { return "PartitionedOrder('" + format_partitioned_order(mu) + "')"; });

  py::class_<BlockSequence>(m, "BlockSequence")
      .def_property_readonly("n", [](const BlockSequence& bs) { return bs.n; })
      .def_property_readonly("blocks", [](const BlockSequence& bs) { return bs.blocks; })
      .def("__len__", [](const BlockSequence& bs) { return bs.blocks.size(); })
      .def("__repr__", [](const BlockSequence& bs) {
        return "BlockSequence(n=" + std::to_string(bs.n) + ", substeps=" +
               std::to_string(bs.blocks.size()) + ")";
      });

  // constructors and families
  m.def("pos_cycle", &positive_cycle, py::arg("n"));
  m.def("neg_cycle", &negative_cycle, py::arg("n"));
  m.def(
      "hhat", [](std::uint32_t n, const std::string& variant) { return hhat(n, variant_from(variant)); },
      py::arg("n"), py::arg("variant") = "standard");
  m.def(
      "mu_hat",
      [](std::uint32_t n, const std::string& variant) { return mu_hat(n, variant_from(variant)); },
      py::arg("n"), py::arg("variant") = "standard");
  m.def("mu_odd", &mu_odd, py::arg("k"));
  m.def("mu_even", &mu_even, py::arg("k"));
  m.def("network_from_json", [](const std::string& text) { return network_from_json(text); },
        py::arg("text"));
  m.def("load_network", &load_network, py::arg("spec"),
        "Builtin spec (pos-cycle:N, neg-cycle:N, hhat:N) or a path to a network JSON file.");

  // schedules
  m.def("parse_schedule", [](const std::string& text) { return parse_partitioned_order(text); },
        py::arg("text"));
  m.def("sequentialize", &sequentialize, py::arg("mu"));
  m.def("count_representatives", &count_representatives, py::arg("n"));
  m.def(
      "enumerate_representatives",
      [](std::uint32_t n, std::uint64_t limit) {
        std::vector<PartitionedOrder> out;
        visit_representatives(n, [&](const AssignmentView& view) {
          out.push_back(realize(view.materialize()));
          return limit == 0 || out.size() < limit;
        });
        return out;
      },
      py::arg("n"), py::arg("limit") = 0,
      "Canonical representative schedules in enumeration order (all of them when limit=0).");

  // dynamics
  m.def(
      "parallelize",
      [](const AffineUnaryNetwork& net, const PartitionedOrder& mu) {
        return parallelize_unary(net, sequentialize(mu));
      },
      py::arg("net"), py::arg("mu"));
  m.def(
      "substep_trace",
      [](const AffineUnaryNetwork& net, const PartitionedOrder& mu) {
        return substep_trace(net, sequentialize(mu));
      },
      py::arg("net"), py::arg("mu"));
  m.def(
      "cycle_census",
      [](const AffineUnaryNetwork& net) {
        const ComponentReport report = cycle_census(net);
        py::list components;
        for (const ComponentInfo& comp : report.components) {
          py::dict d;
          d["vertices"] = comp.vertex_count;
          d["cycle_length"] = comp.cycle_length;
          d["cycle_sign"] = comp.has_constant ? std::string("n/a")
                            : comp.cycle_sign == Sign::positive ? std::string("+")
                                                                : std::string("-");
          d["has_constant"] = comp.has_constant;
          components.append(d);
        }
        py::dict out;
        out["c"] = report.component_count;
        out["components"] = components;
        return out;
      },
      py::arg("net"));
  m.def(
      "count_fixed_points",
      [](const AffineUnaryNetwork& net) {
        const FixedPointCount count = count_fixed_points_unary(net);
        py::dict out;
        out["c"] = count.exponent;
        out["zero"] = count.zero;
        if (auto v = count.value()) out["count"] = *v;
        return out;
      },
      py::arg("net"), "Fixed points of a unary network in exponent form.");
  m.def(
      "brute_force_fixed_points",
      [](const TruthTableNetwork& net, const PartitionedOrder& mu) {
        std::vector<std::string> out;
        for (const Configuration& x : brute_force_fixed_points(net, sequentialize(mu)))
          out.push_back(x.to_string());
        return out;
      },
      py::arg("net"), py::arg("mu"));

  // the census experiment
  m.def(
      "census",
      [](std::uint32_t n, unsigned threads, bool witnesses) {
        CensusOptions options;
        options.threads = threads;
        options.collect_witnesses = witnesses;
        return census_to_dict(census(n, options));
      },
      py::arg("n"), py::arg("threads") = 0, py::arg("witnesses") = false);
  m.def(
      "max_cycles",
      [](std::uint32_t n, unsigned threads) {
        CensusOptions options;
        options.threads = threads;
        return max_cycles(n, options);
      },
      py::arg("n"), py::arg("threads") = 0);
}
