#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopbraid/errors.hpp"
#include "loopbraid/gauss.hpp"
#include "loopbraid/presentations.hpp"
#include "loopbraid/render.hpp"
#include "loopbraid/rewriting.hpp"

namespace py = pybind11;
using namespace loopbraid;

namespace {

Presentation presentation_by_name(const std::string& name, int n) {
  if (name == "ur") return ur_presentation(n);
  if (name == "r") return r_presentation(n);
  if (name == "pur") return pur_presentation(n);
  if (name == "plbe") return plbe_presentation(n);
  throw DomainError("unknown presentation '" + name + "' (expected ur, r, pur or plbe)");
}

std::vector<std::string> image_strings(const PCAut& f) {
  std::vector<std::string> out;
  for (const auto& w : f.images()) out.push_back(format(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_loopbraid, m) {
  m.doc() = "Loop braid toolkit core";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MoveInapplicable>(m, "MoveInapplicable", PyExc_ValueError);
  py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_RuntimeError);
  // DomainError derives from std::invalid_argument, which pybind11 maps to ValueError.

  py::class_<FreeWord>(m, "FreeWord")
      .def(py::init([](const std::string& text, int rank) { return parse_free_word(text, rank); }),
           py::arg("text"), py::arg("rank"))
      .def_property_readonly("rank", &FreeWord::rank)
      .def("__len__", &FreeWord::length)
      .def("__str__", [](const FreeWord& w) { return format(w); })
      .def("__repr__", [](const FreeWord& w) { return "FreeWord('" + format(w) + "', " + std::to_string(w.rank()) + ")"; })
      .def("__mul__", &multiply)
      .def("inverse", &invert)
      .def("conjugate", &conjugate, py::arg("by"), "w^-1 self w")
      .def(py::self == py::self);

  py::class_<PCAut>(m, "PCAut")
      .def_static("identity", &PCAut::identity)
      .def_static("sigma", &PCAut::sigma)
      .def_static("sigma_inverse", &PCAut::sigma_inverse)
      .def_static("rho", &PCAut::rho)
      .def_static("tau", &PCAut::tau)
      .def_static("alpha", &PCAut::alpha)
      .def_property_readonly("rank", &PCAut::rank)
      .def_property_readonly("images", &image_strings)
      .def_property_readonly("permutation", &PCAut::permutation)
      .def_property_readonly("signs", &PCAut::signs)
      .def("__call__", [](const PCAut& f, const FreeWord& u) { return apply(f, u); })
      .def("compose", &compose, py::arg("other"), "self o other")
      .def("__str__", [](const PCAut& f) { return format(f); })
      .def(py::self == py::self);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init([](const std::string& text, int strands) { return parse_braid_word(text, strands); }),
           py::arg("text"), py::arg("strands"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def("__len__", &BraidWord::length)
      .def("__str__", [](const BraidWord& w) { return format(w); })
      .def("__repr__", [](const BraidWord& w) {
        return "BraidWord('" + format(w) + "', " + std::to_string(w.strands()) + ")";
      })
      .def("__add__", &concat)
      .def(py::self == py::self);

  m.def("evaluate", py::overload_cast<const BraidWord&>(&evaluate));
  m.def("equal", &equal);
  m.def("permutation", py::overload_cast<const BraidWord&>(&permutation));
  m.def("strand_endpoints", &strand_endpoints);
  m.def("is_pure", &is_pure);
  m.def("is_extended", &is_extended);
  m.def("inverse_word", &inverse_word);
  m.def("alpha_word", &alpha_word, py::arg("strands"), py::arg("i"), py::arg("j"));
  m.def("random_word", &random_word, py::arg("strands"), py::arg("length"), py::arg("seed"),
        py::arg("allow_tau") = false);

  m.def("simplify", &simplify, py::arg("word"), py::arg("budget") = 20000);
  m.def(
      "search",
      [](const BraidWord& a, const BraidWord& b, std::size_t depth, std::size_t max_states, bool extended)
          -> py::object {
        SearchOptions options;
        options.max_depth = depth;
        options.max_states = max_states;
        options.extended = extended;
        const SearchResult r = bfs_equivalent(a, b, options);
        if (r.status == SearchStatus::Inconclusive) return py::none();
        return py::str(path_to_json_lines(r.rules, r.path));
      },
      py::arg("first"), py::arg("second"), py::arg("depth") = 8, py::arg("max_states") = 200000,
      py::arg("extended") = true,
      "JSON-lines move path, or None when no path was found within budget (not a proof of inequality).");

  py::class_<GaussDiagram>(m, "GaussDiagram")
      .def_property_readonly("strands", &GaussDiagram::strands)
      .def_property_readonly("endpoints", &GaussDiagram::endpoints)
      .def_property_readonly("arrows",
                             [](const GaussDiagram& g) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const Arrow& a : g.arrows()) out.emplace_back(a.from, a.to, a.sign);
                               return out;
                             })
      .def("to_json", [](const GaussDiagram& g) { return to_json(g); })
      .def_static("from_json", &gauss_from_json)
      .def(py::self == py::self);
  m.def("from_word", &from_word);
  m.def("realize", &realize);
  m.def("gauss_equal", &gauss_equal);

  m.def(
      "verify_presentation",
      [](const std::string& name, int n) { return report_to_json(verify(presentation_by_name(name, n))); },
      py::arg("name"), py::arg("strands"), "JSON report for one of ur, r, pur, plbe.");

  m.def("render_ascii", &render_ascii);
  m.def("render_svg", &render_svg);
}
