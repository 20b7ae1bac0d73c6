#include "provar/io.hpp"

#include <sstream>

#include "provar/errors.hpp"

namespace provar {

std::string label_name(const Alphabet& alphabet, int label) {
  if (alphabet.has_symbols())
    return std::string(1, alphabet.symbol(static_cast<std::size_t>(label)));
  return "x" + std::to_string(label + 1);
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["alphabet"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.label_count(); ++i)
    j["alphabet"].push_back(label_name(g.alphabet(), static_cast<int>(i)));
  j["vertices"] = g.vertex_count();
  j["base"] = 0;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges())
    j["edges"].push_back({{"from", e.from},
                          {"label", label_name(g.alphabet(), e.label)},
                          {"to", e.to}});
  return j;
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  std::vector<std::string> names = j.at("alphabet");
  bool latin = true;
  std::string symbols;
  for (const std::string& s : names) {
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z')
      symbols += s[0];
    else
      latin = false;
  }
  Alphabet alphabet = latin && !names.empty()
                          ? Alphabet(names.size(), symbols)
                          : Alphabet(names.size());
  RawGraph raw{alphabet, j.at("vertices").get<std::size_t>(),
               j.at("base").get<int>(), {}};
  for (const auto& e : j.at("edges")) {
    std::string label = e.at("label");
    int li = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == label) li = static_cast<int>(i);
    if (li < 0) throw UnknownSymbol(label.empty() ? '?' : label[0]);
    raw.edges.push_back({e.at("from").get<int>(), li, e.at("to").get<int>()});
  }
  return fold(raw);
}

std::string graph_to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "digraph stallings {\n  rankdir=LR;\n";
  out << "  0 [shape=doublecircle];\n";
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    out << "  " << v << " [shape=circle];\n";
  for (const Edge& e : g.edges())
    out << "  " << e.from << " -> " << e.to << " [label=\""
        << label_name(g.alphabet(), e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json closure_result_to_json(const ClosureResult& r) {
  nlohmann::json j;
  j["variety"] = r.variety.str();
  j["status"] = r.status == ClosureStatus::Exact ? "EXACT" : "SOUND_UPPER";
  j["primes_used"] = r.primes_used;
  j["graph"] = graph_to_json(r.graph);
  j["generators"] = nlohmann::json::array();
  for (const Word& w : generators(r.graph))
    j["generators"].push_back(w.format(r.graph.alphabet()));
  j["certificates"] = r.certificates;
  return j;
}

nlohmann::json fringe_to_json(const Fringe& f) {
  nlohmann::json members = nlohmann::json::array();
  for (const LabeledGraph& m : f.members) {
    auto morphism = find_morphism(f.origin, m);
    nlohmann::json entry;
    entry["graph"] = graph_to_json(m);
    entry["witness"] = morphism ? nlohmann::json(morphism->vertex_map)
                                : nlohmann::json(nullptr);
    members.push_back(std::move(entry));
  }
  return {{"origin", graph_to_json(f.origin)}, {"members", std::move(members)}};
}

std::vector<std::vector<Word>> parse_subgroup_file(const std::string& text,
                                                   const Alphabet& alphabet) {
  std::vector<std::vector<Word>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_words(line, alphabet));
  }
  return out;
}

}  // namespace provar
