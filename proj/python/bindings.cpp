#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperpd/classify.hpp"
#include "hyperpd/errors.hpp"
#include "hyperpd/formulas.hpp"
#include "hyperpd/hypergraph.hpp"
#include "hyperpd/ideal.hpp"
#include "hyperpd/oracle.hpp"
#include "hyperpd/verify.hpp"

namespace py = pybind11;
using namespace hyperpd;

namespace {

// Strings starting with '{' are hypergraph JSON, anything else ideal text.
Hypergraph load_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return hypergraph_from_json(text);
  return from_ideal(prune_redundant(parse_ideal(text)));
}

MonomialIdeal load_ideal(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return to_ideal(hypergraph_from_json(text), true);
  return prune_redundant(parse_ideal(text));
}

py::dict verify_outcome(const VerifyOutcome& out) {
  py::dict d;
  d["family"] = out.family;
  d["instances"] = out.instances;
  d["stats"] = out.stats;
  py::list mism;
  for (const auto& m : out.mismatches) {
    py::dict e;
    e["instance"] = m.instance;
    e["formula"] = m.formula;
    e["oracle"] = m.oracle;
    e["note"] = m.note;
    mism.append(e);
  }
  d["mismatches"] = mism;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hyperpd, m) {
  m.doc() = "Projective dimension of square-free monomial ideals via dual hypergraphs";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  m.def("minimalize", [](const std::string& text) { return minimalize(parse_ideal(text)).to_string(); },
        py::arg("ideal"));

  m.def("hypergraph", [](const std::string& text) { return hypergraph_to_json(load_graph(text)); },
        py::arg("source"), "Dual hypergraph as JSON text.");

  m.def("to_ideal", [](const std::string& json) { return to_ideal(hypergraph_from_json(json), true).to_string(); },
        py::arg("hypergraph_json"));

  m.def(
      "remove_union_edges",
      [](const std::string& text) {
        std::vector<std::string> removed;
        auto h = remove_union_edges(load_graph(text), &removed);
        return py::make_tuple(hypergraph_to_json(h), removed);
      },
      py::arg("source"));

  m.def(
      "pd",
      [](const std::string& text, bool oracle, int field, int budget) {
        py::dict d;
        if (oracle) {
          OracleOptions opt;
          opt.max_variables = budget;
          auto [pd, reg] = pd_reg(load_ideal(text), field, opt);
          d["pd"] = pd;
          d["reg"] = reg;
          d["method"] = "oracle";
          d["trace"] = std::vector<std::string>{};
          return d;
        }
        auto res = pd_auto(load_graph(text), {budget, field});
        d["pd"] = res.pd;
        d["reg"] = res.reg ? py::object(py::int_(*res.reg)) : py::object(py::none());
        d["method"] = res.method;
        d["trace"] = res.trace;
        return d;
      },
      py::arg("source"), py::arg("oracle") = false, py::arg("field") = 0, py::arg("budget") = 16);

  m.def(
      "betti",
      [](const std::string& text, int field, bool cross) {
        const auto ideal = load_ideal(text);
        const auto t = cross ? lcm_lattice_betti(ideal, field) : betti_table(ideal, field);
        py::dict entries;
        for (const auto& [key, rank] : t.entries()) {
          entries[py::make_tuple(key.first, t.sigma_string(key.second))] = rank;
        }
        py::dict d;
        d["pd"] = t.pd();
        d["reg"] = t.reg();
        d["totals"] = t.totals();
        d["entries"] = entries;
        return d;
      },
      py::arg("source"), py::arg("field") = 0, py::arg("cross") = false);

  m.def(
      "classify",
      [](const std::string& text) {
        auto h = remove_union_edges(load_graph(text));
        return shape_to_json(classify_shape(h));
      },
      py::arg("source"), "Shape data as JSON text, after union-edge removal.");

  m.def(
      "split",
      [](const std::string& text, const std::vector<int>& v1, const std::vector<int>& v2, int field) {
        auto r = check_betti_splitting(load_ideal(text), v1, v2, field);
        py::dict d;
        d["q"] = r.q;
        d["r"] = r.r;
        d["pdJ"] = r.pdJ;
        d["pdK"] = r.pdK;
        d["pdJK"] = r.pdJK;
        d["regJ"] = r.regJ;
        d["regK"] = r.regK;
        d["regJK"] = r.regJK;
        d["beta_q_qr_JK"] = r.beta_q_qr_JK;
        d["hypotheses_hold"] = r.hypotheses_hold;
        d["predicted_pd"] = r.predicted_pd ? py::object(py::int_(*r.predicted_pd)) : py::object(py::none());
        return d;
      },
      py::arg("source"), py::arg("v1"), py::arg("v2"), py::arg("field") = 0);

  m.def("pd_open_string", &pd_open_string, py::arg("mu"));
  m.def("reg_open_string", &reg_open_string, py::arg("mu"));
  m.def("pd_open_cycle", &pd_open_cycle, py::arg("mu"));
  m.def(
      "pd_string_with_edge",
      [](const std::vector<int>& gaps) {
        auto r = pd_string_with_edge(gaps);
        return py::make_tuple(r.pd, r.case_tag);
      },
      py::arg("gaps"));
  m.def(
      "pd_cycle_with_edge", [](const std::vector<int>& gaps) { return pd_cycle_with_edge(gaps).pd; },
      py::arg("gaps"));

  m.def(
      "verify",
      [](const std::string& family, int max_mu, int samples, std::uint64_t seed, std::vector<int> sample_mus) {
        auto f = parse_family(family);
        if (!f) throw PreconditionError("unknown family '" + family + "'");
        VerifyBounds b;
        b.max_mu = max_mu;
        b.samples = samples;
        b.seed = seed;
        b.sample_mus = std::move(sample_mus);
        return verify_outcome(verify_family(*f, b));
      },
      py::arg("family"), py::arg("max_mu") = 8, py::arg("samples") = 0, py::arg("seed") = 1,
      py::arg("sample_mus") = std::vector<int>{});
}
