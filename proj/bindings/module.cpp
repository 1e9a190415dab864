#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "t5census/bounds.hpp"
#include "t5census/census.hpp"
#include "t5census/constructions.hpp"
#include "t5census/detection.hpp"
#include "t5census/thresholds.hpp"
#include "t5census/triple_system.hpp"
#include "t5census/verify.hpp"

namespace py = pybind11;
using namespace t5census;

namespace {

py::object big_u(u128 v) { return py::module_::import("builtins").attr("int")(u128_to_string(v)); }
py::object big_i(i128 v) { return py::module_::import("builtins").attr("int")(i128_to_string(v)); }

py::dict census_dict(const CensusReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["total"] = big_u(r.total);
  d["i_n"] = big_u(r.i_n);
  d["s_n"] = big_u(r.s_n);
  d["t5_free"] = big_u(r.t5_free);
  d["extra"] = big_u(r.extra);
  d["max_t5free_edges"] = r.max_t5free_edges;
  d["workers"] = r.workers;
  d["version"] = r.version;
  return d;
}

py::dict criterion_dict(const CriterionResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["name"] = r.name;
  d["claim"] = r.claim;
  d["passed"] = r.passed;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "T5-free triple systems: checks, partitions, constructions, exact census, "
            "extremal search and bound verification";
  m.attr("__version__") = kVersion;

  py::class_<TripleSystem>(m, "TripleSystem")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<std::array<int, 3>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &TripleSystem::n)
      .def("edge_count", &TripleSystem::edge_count)
      .def("has", &TripleSystem::has)
      .def("with_edge", &TripleSystem::with_edge)
      .def("without_edge", &TripleSystem::without_edge)
      .def("edges", &TripleSystem::edges)
      .def("to_hex", &TripleSystem::to_hex_string)
      .def("to_triples", &TripleSystem::to_triples_string)
      .def_static("from_string", &TripleSystem::from_string, py::arg("text"))
      .def("__eq__", [](const TripleSystem& a, const TripleSystem& b) { return a == b; })
      .def("__repr__", [](const TripleSystem& h) {
        return "TripleSystem('" + h.to_hex_string() + "')";
      });

  py::class_<OrderedPartition>(m, "OrderedPartition")
      .def_readonly("n", &OrderedPartition::n)
      .def_readonly("x_mask", &OrderedPartition::x_mask)
      .def("x_vertices", &OrderedPartition::x_vertices)
      .def("y_vertices", &OrderedPartition::y_vertices)
      .def("x_size", &OrderedPartition::x_size)
      .def("y_size", &OrderedPartition::y_size)
      .def("__repr__", [](const OrderedPartition& p) {
        return "OrderedPartition(n=" + std::to_string(p.n) +
               ", x_mask=" + std::to_string(p.x_mask) + ")";
      });

  m.def("make_partition", &make_partition, py::arg("n"), py::arg("x_mask"));
  m.def("partition_from_prefix", &partition_from_prefix, py::arg("n"), py::arg("a"));

  m.def(
      "contains_t5",
      [](const TripleSystem& h) -> py::object {
        auto w = contains_t5(h);
        if (!w) return py::none();
        return py::make_tuple(w->u, w->v, py::make_tuple(w->edge[0], w->edge[1], w->edge[2]));
      },
      py::arg("h"), "None, or (u, v, edge) with edge inside the neighborhood of {u, v}");
  m.def("has_independent_neighborhoods", &has_independent_neighborhoods, py::arg("h"));
  m.def(
      "is_semibipartite",
      [](const TripleSystem& h, int sweep_cap) -> py::object {
        auto p = is_semibipartite(h, sweep_cap);
        if (!p) return py::none();
        return py::cast(*p);
      },
      py::arg("h"), py::arg("sweep_cap") = kPartitionSweepCap);
  m.def(
      "optimal_partitions",
      [](const TripleSystem& h, std::size_t witness_cap, int sweep_cap) {
        auto r = optimal_partitions(h, witness_cap, sweep_cap);
        py::dict d;
        d["d_h"] = r.d_h;
        d["witnesses"] = r.witnesses;
        d["total_witnesses"] = r.total_witnesses;
        return d;
      },
      py::arg("h"), py::arg("witness_cap") = kDefaultWitnessCap,
      py::arg("sweep_cap") = kPartitionSweepCap);

  m.def(
      "b3",
      [](int n) {
        B3Result r = b3(n);
        return py::make_tuple(r.value, r.a);
      },
      py::arg("n"), "(max of C(a,2)(n-a), smallest maximizing a)");
  m.def("build_b3", &build_b3, py::arg("n"));
  m.def(
      "ns_sample",
      [](int n, std::uint64_t seed) { return ns_sample(ns_family_base(n), seed); },
      py::arg("n"), py::arg("seed") = 1,
      "seed-drawn member of the T5-free, non-semi-bipartite family");
  m.def("random_semibipartite", &random_semibipartite, py::arg("n"), py::arg("a"),
        py::arg("p"), py::arg("seed") = 1);
  m.def("random_triple_system", &random_triple_system, py::arg("n"), py::arg("p"),
        py::arg("seed") = 1);

  m.def(
      "full_census",
      [](int n, int workers, bool deep) {
        return census_dict(full_census(n, {workers, deep}));
      },
      py::arg("n"), py::arg("workers") = 1, py::arg("deep") = false);
  m.def(
      "counting_gap",
      [](int n, int workers) {
        Theorem1Result t = verify_theorem1_lower(full_census(n, {workers, false}));
        py::dict d;
        d["n"] = t.n;
        d["holds"] = t.holds;
        d["margin"] = big_i(t.margin);
        return d;
      },
      py::arg("n"), py::arg("workers") = 1,
      "exact margin of 2^(4n) (I(n) - S(n)) > S(n)");
  m.def(
      "extremal_search",
      [](int n, std::uint64_t node_budget, std::uint64_t time_limit_ms) {
        ExtremalResult r = extremal_search(n, {node_budget, time_limit_ms});
        py::dict d;
        d["n"] = r.n;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["completed"] = r.completed;
        d["witness"] = r.witness;
        d["nodes"] = r.nodes;
        return d;
      },
      py::arg("n"), py::arg("node_budget") = UINT64_MAX, py::arg("time_limit_ms") = 0);

  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def(
      "entropy_facts",
      [](int n, std::int64_t p, std::int64_t q) {
        EntropyFactsResult r = entropy_facts_check(n, Rational{p, q});
        py::dict d;
        d["n"] = r.n;
        d["x"] = py::make_tuple(r.x.num, r.x.den);
        d["single_holds"] = r.single_holds;
        d["tail_holds"] = r.tail_holds;
        d["exact"] = r.exact;
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("q"),
      "C(n,floor(xn)) < 2^(H(x)n) and the tail form, exact for x = p/q");
  m.def("chernoff_bound", &chernoff_bound, py::arg("m"), py::arg("p"), py::arg("a"));

  m.def(
      "run_criterion", [](int id) { return criterion_dict(run_criterion(id)); }, py::arg("id"));
  m.def("run_all_criteria", []() {
    py::list out;
    for (const auto& r : run_all_criteria()) out.append(criterion_dict(r));
    return out;
  });
}
