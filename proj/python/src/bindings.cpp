#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rbg/cli.hpp"
#include "rbg/constructions.hpp"
#include "rbg/corpus.hpp"
#include "rbg/io.hpp"

namespace py = pybind11;
using namespace rbg;

namespace {

/// Python handle; pybind11 holders cannot point to const.
struct Grp {
  GroupPtr p;
};

Census census_of(const GroupPtr& g, const std::string& method, bool classify_it) {
  Census c;
  if (method == "brute")
    c = brute_force_enumerate(g);
  else if (method == "graph")
    c = graph_enumerate(g);
  else
    throw Error(ErrorCode::invalid_input, "method must be graph or brute");
  if (classify_it) classify(c);
  return c;
}

RBOperator op_of(const GroupPtr& g, std::vector<elem_t> images, int weight) {
  if (images.size() != g->order()) throw Error(ErrorCode::invalid_input, "expected one image per element");
  for (elem_t x : images)
    if (x >= g->order()) throw Error(ErrorCode::invalid_input, "image out of range");
  return RBOperator(g, std::move(images), weight);
}

py::object refusal(const Refusal& r) {
  if (r.op) return py::cast(r.op->images());
  return py::none();
}

}  // namespace

PYBIND11_MODULE(_rbg, m) {
  m.doc() = "Rota-Baxter operators on finite groups";

  py::register_exception<Error>(m, "RbgError", PyExc_ValueError);

  py::class_<Grp>(m, "Group")
      .def_property_readonly("order", [](const Grp& g) { return g.p->order(); })
      .def_property_readonly("name", [](const Grp& g) { return g.p->name(); })
      .def_property_readonly("identity", [](const Grp& g) { return g.p->identity(); })
      .def_property_readonly("labels", [](const Grp& g) { return g.p->labels(); })
      .def_property_readonly("content_hash", [](const Grp& g) { return g.p->content_hash(); })
      .def("mul", [](const Grp& g, elem_t a, elem_t b) { return g.p->mul(a, b); })
      .def("inv", [](const Grp& g, elem_t a) { return g.p->inv(a); })
      .def("table", [](const Grp& g) { return g.p->table(); })
      .def("is_abelian", [](const Grp& g) { return g.p->is_abelian(); })
      .def("to_json", [](const Grp& g) { return dump(group_to_json(*g.p)); })
      .def_static("from_json", [](const std::string& text) { return Grp{group_from_json(parse_json(text))}; })
      .def_static(
          "from_table", [](const Table& t, const std::string& name) { return Grp{FiniteGroup::from_cayley_table(t, name)}; },
          py::arg("table"), py::arg("name") = "")
      .def("__repr__", [](const Grp& g) {
        return "<Group " + g.p->name() + " of order " + std::to_string(g.p->order()) + ">";
      });

  m.def("corpus_names", &corpus_names);
  m.def("corpus_group", [](const std::string& name) { return Grp{corpus_group(name)}; });

  m.def(
      "verify",
      [](const Grp& G, std::vector<elem_t> images, int weight) {
        const GroupPtr& g = G.p;
        const auto op = op_of(g, std::move(images), weight);
        const auto& r = op.verify();
        py::object w = py::none();
        if (r.witness) w = py::make_tuple(r.witness->first, r.witness->second);
        return py::make_tuple(r.valid(), w);
      },
      py::arg("group"), py::arg("images"), py::arg("weight") = 1,
      "(valid, witness): witness is the first failing pair or None");

  m.def(
      "enumerate",
      [](const Grp& G, const std::string& method) {
        const GroupPtr& g = G.p;
        std::vector<std::vector<elem_t>> out;
        for (const auto& op : census_of(g, method, false).operators) out.push_back(op.images());
        return out;
      },
      py::arg("group"), py::arg("method") = "graph", "All weight-1 operators as sorted image lists");

  m.def(
      "census_json",
      [](const Grp& G, const std::string& method, bool classify_it) {
        const GroupPtr& g = G.p;
        return dump(census_to_json(census_of(g, method, classify_it)));
      },
      py::arg("group"), py::arg("method") = "graph", py::arg("classify") = false);

  m.def(
      "derived_json",
      [](const Grp& G, std::vector<elem_t> images) {
        const GroupPtr& g = G.p;
        auto op = op_of(g, std::move(images), 1);
        require_valid(op, 1, "derived");
        return dump(derived_to_json(derived_group(op), structure_report(op)));
      },
      py::arg("group"), py::arg("images"));

  m.def(
      "extend_json",
      [](const Grp& G, std::vector<elem_t> gens, std::vector<elem_t> images) {
        const GroupPtr& g = G.p;
        return dump(extension_to_json(extend_to_rb(ExtensionProblem::make(g, std::move(gens), std::move(images)))));
      },
      py::arg("group"), py::arg("gens"), py::arg("images"));

  m.def(
      "lie_ring_json",
      [](const Grp& G, std::optional<std::vector<elem_t>> images) {
        const GroupPtr& g = G.p;
        auto l = associated_lie_ring(g);
        Json j = lie_ring_to_json(l);
        if (images) {
          auto r = induced_rb(l, op_of(g, std::move(*images), 1));
          if (r.op)
            j["induced"] = lie_operator_to_json(*r.op, verify_lie_rb(l, *r.op));
          else
            j["induced"] = {{"preserves_series", false}, {"witness", {r.witness->first, r.witness->second}}};
        }
        return dump(j);
      },
      py::arg("group"), py::arg("images") = py::none());

  m.def("power_map", [](const Grp& G, long long n) { return refusal(power_map(G.p, n)); },
        "Images of g -> g^n, or None when it is not an operator");
  m.def("central_conjugation", [](const Grp& G, elem_t by) { return refusal(central_conjugation(G.p, by)); });
  m.def("tilde", [](const Grp& G, std::vector<elem_t> images) {
    return tilde(op_of(G.p, std::move(images), 1)).images();
  });
  m.def("is_splitting", [](const Grp& G, std::vector<elem_t> images) {
    return is_splitting(op_of(G.p, std::move(images), 1)).splitting;
  });

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli_dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the rbg command line; returns (exit code, stdout, stderr)");
}
