#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilgraph/acceptance.hpp"
#include "nilgraph/analysis.hpp"
#include "nilgraph/theorems.hpp"

namespace py = pybind11;

namespace {

using namespace nilgraph;

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

Caps make_caps(std::int64_t max_order, std::int64_t clique_cap, std::int64_t dominating_cap,
               std::int64_t coloring_cap, std::int64_t spectra_cap) {
  Caps caps;
  caps.max_order = max_order;
  caps.clique_cap = clique_cap;
  caps.dominating_cap = dominating_cap;
  caps.coloring_cap = coloring_cap;
  caps.spectra_cap = spectra_cap;
  return caps;
}

py::list verdicts_to_py(const std::vector<TheoremVerdict>& verdicts) {
  py::list out;
  for (const auto& v : verdicts) out.append(json_to_py(verdict_json(v)));
  return out;
}

}  // namespace

PYBIND11_MODULE(nilgraph, m) {
  m.doc() = "nilpotent graphs of finite commutative rings: exact invariants and "
            "closed-form verdicts";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<FalsificationError>(m, "FalsificationError", PyExc_AssertionError);

  py::class_<FiniteRing>(m, "Ring")
      .def(py::init([](const std::string& text, std::int64_t max_order) {
             return FiniteRing(parse_ring_spec(text), max_order);
           }),
           py::arg("spec"), py::arg("max_order") = kDefaultMaxOrder)
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("text",
                             [](const FiniteRing& r) { return r.spec().canonical_text; })
      .def_property_readonly("factors", [](const FiniteRing& r) { return r.spec().factors; })
      .def_property_readonly("one", &FiniteRing::one)
      .def("add", &FiniteRing::add)
      .def("sub", &FiniteRing::sub)
      .def("neg", &FiniteRing::neg)
      .def("mul", &FiniteRing::mul)
      .def("is_nilpotent", &FiniteRing::is_nilpotent)
      .def("label", &FiniteRing::element_label)
      .def("nil", [](const FiniteRing& r) { return nil_set(r).nilpotent_ids; })
      .def("__repr__", [](const FiniteRing& r) { return "Ring(" + r.spec().canonical_text + ")"; });

  py::class_<NilpotentGraph>(m, "Graph")
      .def(py::init([](const FiniteRing& ring) { return build_graph(ring); }), py::arg("ring"))
      .def_property_readonly("vertex_count", &NilpotentGraph::vertex_count)
      .def_property_readonly("edge_count", &NilpotentGraph::edge_count)
      .def("vertices", [](const NilpotentGraph& g) { return g.vertices(); })
      .def("edges",
           [](const NilpotentGraph& g) {
             std::vector<std::pair<std::int64_t, std::int64_t>> out;
             for (const auto& [u, v] : g.edge_list()) {
               out.emplace_back(g.element_of(u), g.element_of(v));
             }
             return out;
           })
      .def("degree",
           [](const NilpotentGraph& g, std::int64_t element) {
             const std::int32_t pos = g.position_of(element);
             if (pos < 0) throw DomainError("element is nilpotent, not a vertex");
             return g.degree(pos);
           },
           py::arg("element"))
      .def("adjacent",
           [](const NilpotentGraph& g, std::int64_t x, std::int64_t y) {
             const std::int32_t u = g.position_of(x), v = g.position_of(y);
             if (u < 0 || v < 0) throw DomainError("element is nilpotent, not a vertex");
             return g.adjacent(u, v);
           })
      .def("to_dot", [](const NilpotentGraph& g) { return to_dot(g); })
      .def("girth",
           [](const NilpotentGraph& g) -> py::object {
             const Girth value = girth(g);
             if (value.infinite) return py::none();
             return py::int_(value.length);
           })
      .def("clique_number",
           [](const NilpotentGraph& g, std::int64_t cap) { return clique_number(g, cap); },
           py::arg("cap") = 512)
      .def("dominating_number",
           [](const NilpotentGraph& g, std::int64_t cap) {
             const DominatingSet ds = dominating_number(g, cap);
             std::vector<std::int64_t> witness;
             for (std::int32_t pos : ds.witness) witness.push_back(g.element_of(pos));
             return py::make_tuple(ds.gamma, witness);
           },
           py::arg("cap") = 512)
      .def("chromatic_index",
           [](const NilpotentGraph& g, std::int64_t cap) {
             const EdgeColoringResult ec = chromatic_index(g, cap);
             return py::make_tuple(ec.chi_prime, ec.vizing_class);
           },
           py::arg("cap") = 16)
      .def("chromatic_number",
           [](const NilpotentGraph& g, std::int64_t cap) {
             return vertex_chromatic_number(g, components_classify(g), cap);
           },
           py::arg("cap") = 16)
      .def("__repr__", [](const NilpotentGraph& g) {
        return "Graph(" + g.ring().spec().canonical_text + ", " +
               std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  m.def(
      "analyze",
      [](const std::string& spec, std::int64_t max_order, std::int64_t clique_cap,
         std::int64_t dominating_cap, std::int64_t coloring_cap, std::int64_t spectra_cap) {
        RingContext ctx(spec, make_caps(max_order, clique_cap, dominating_cap, coloring_cap,
                                        spectra_cap));
        return json_to_py(analysis_json(analyze_ring(ctx), ctx));
      },
      py::arg("spec"), py::arg("max_order") = kDefaultMaxOrder, py::arg("clique_cap") = 512,
      py::arg("dominating_cap") = 512, py::arg("coloring_cap") = 16,
      py::arg("spectra_cap") = 2048,
      "Full report for one ring: invariants, decomposition, spectra, verdicts.");

  m.def(
      "verify_instance",
      [](const std::string& spec) {
        RingContext ctx(spec, Caps{});
        return verdicts_to_py(verify_instance(ctx));
      },
      py::arg("spec"), "Theorem verdicts for one ring.");

  m.def(
      "sweep_zn",
      [](std::int64_t max_n, int workers) {
        const SweepResult result = sweep_verify(enumerate_zn(max_n), Caps{}, workers);
        return json_to_py(sweep_json(result));
      },
      py::arg("max_n"), py::arg("workers") = 0, "Verdict rows for Z_n, 2 <= n <= max_n.");

  m.def(
      "sweep_products",
      [](std::int64_t max_order, int workers) {
        const SweepResult result =
            sweep_verify(enumerate_two_factor_products(max_order), Caps{}, workers);
        return json_to_py(sweep_json(result));
      },
      py::arg("max_order"), py::arg("workers") = 0,
      "Verdict rows for two-factor products of order <= max_order.");

  m.def(
      "bipartition_witness",
      [](const std::string& spec) {
        const FiniteRing ring(parse_ring_spec(spec));
        const BipartitionWitness witness = construct_bipartition(ring);
        py::dict out;
        out["clique_part"] = witness.clique_part;
        out["part_a"] = witness.part_a;
        out["part_b"] = witness.part_b;
        return out;
      },
      py::arg("spec"), "Verified structure-theorem bipartition for composite Z_n.");

  m.def(
      "even_order_witness",
      [](const FiniteRing& ring) { return even_order_witness(ring); }, py::arg("ring"),
      "An x outside Nil(R) with 2x nilpotent, for even-order rings.");

  m.def(
      "odd_halving_check",
      [](const FiniteRing& ring) {
        const HalvingCheck check = odd_halving_check(ring, nil_set(ring));
        return py::make_tuple(check.holds,
                              check.counterexample ? py::object(py::int_(*check.counterexample))
                                                   : py::object(py::none()));
      },
      py::arg("ring"), "Whether 2x nilpotent implies x nilpotent, with a counterexample.");

  m.def(
      "run_acceptance",
      [](std::int64_t max_n, int workers) {
        AcceptanceOptions options;
        options.max_n = max_n;
        options.workers = workers;
        py::list out;
        for (const auto& r : run_acceptance(options, nullptr)) {
          py::dict entry;
          entry["id"] = r.id;
          entry["name"] = r.name;
          entry["pass"] = r.pass;
          entry["detail"] = r.detail;
          out.append(std::move(entry));
        }
        return out;
      },
      py::arg("max_n") = 0, py::arg("workers") = 0,
      "Acceptance criteria results (max_n = 0 runs the stated bounds).");
}
