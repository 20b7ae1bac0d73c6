#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "provar/closures.hpp"
#include "provar/io.hpp"
#include "provar/lattice.hpp"

namespace py = pybind11;
using namespace provar;

namespace {

Alphabet make_alphabet(const std::string& symbols) {
  return Alphabet::from_symbols(symbols);
}

LabeledGraph build(const std::vector<std::string>& gens,
                   const std::string& symbols) {
  Alphabet a = make_alphabet(symbols);
  std::vector<Word> words;
  for (const std::string& g : gens) words.push_back(Word::parse(g, a));
  return LabeledGraph::from_generators(words, a);
}

std::vector<std::string> basis_strings(const LabeledGraph& g) {
  std::vector<std::string> out;
  for (const Word& w : generators(g)) out.push_back(w.format(g.alphabet()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_provar, m) {
  m.doc() = "Stallings-automata computations in free groups";

  py::class_<LabeledGraph>(m, "Graph")
      .def_property_readonly("vertex_count", &LabeledGraph::vertex_count)
      .def_property_readonly("edge_count", &LabeledGraph::edge_count)
      .def_property_readonly("rank", &LabeledGraph::rank)
      .def_property_readonly("index",
                             [](const LabeledGraph& g) { return g.index(); })
      .def("member",
           [](const LabeledGraph& g, const std::string& w) {
             return g.member(Word::parse(w, g.alphabet()));
           })
      .def("generators", &basis_strings)
      .def("edges",
           [](const LabeledGraph& g) {
             std::vector<std::tuple<int, std::string, int>> out;
             for (const Edge& e : g.edges())
               out.emplace_back(e.from, label_name(g.alphabet(), e.label), e.to);
             return out;
           })
      .def("to_json", [](const LabeledGraph& g) { return graph_to_json(g).dump(); })
      .def("to_dot", &graph_to_dot)
      .def("__eq__",
           [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__hash__", &LabeledGraph::hash)
      .def("__repr__", [](const LabeledGraph& g) {
        return "<Graph vertices=" + std::to_string(g.vertex_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("fold", &build, py::arg("generators"), py::arg("alphabet"));
  m.def(
      "member",
      [](const std::vector<std::string>& gens, const std::string& w,
         const std::string& symbols) {
        LabeledGraph g = build(gens, symbols);
        return g.member(Word::parse(w, g.alphabet()));
      },
      py::arg("generators"), py::arg("word"), py::arg("alphabet"));
  m.def(
      "intersect",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         const std::string& s) { return intersect(build(a, s), build(b, s)); },
      py::arg("generators1"), py::arg("generators2"), py::arg("alphabet"));
  m.def(
      "join",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         const std::string& s) { return join(build(a, s), build(b, s)); },
      py::arg("generators1"), py::arg("generators2"), py::arg("alphabet"));
  m.def(
      "fringe",
      [](const std::vector<std::string>& gens, const std::string& s) {
        return fringe(build(gens, s)).members;
      },
      py::arg("generators"), py::arg("alphabet"));
  m.def(
      "dense",
      [](const std::vector<std::string>& gens, const std::string& variety,
         const std::string& s) {
        return dense(build(gens, s), VarietySpec::parse(variety));
      },
      py::arg("generators"), py::arg("variety"), py::arg("alphabet"));
  m.def(
      "closure",
      [](const std::vector<std::string>& gens, const std::string& variety,
         const std::string& s) {
        ClosureResult r = closure(build(gens, s), VarietySpec::parse(variety));
        py::dict out;
        out["variety"] = r.variety.str();
        out["status"] =
            r.status == ClosureStatus::Exact ? "EXACT" : "SOUND_UPPER";
        out["primes_used"] = r.primes_used;
        out["generators"] = basis_strings(r.graph);
        out["graph"] = r.graph;
        out["certificates"] = r.certificates;
        return out;
      },
      py::arg("generators"), py::arg("variety"), py::arg("alphabet"));

  py::register_exception<Error>(m, "ProvarError");
}
