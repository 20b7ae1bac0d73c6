#ifndef PROVAR_IO_HPP
#define PROVAR_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "provar/closures.hpp"
#include "provar/graph.hpp"
#include "provar/lattice.hpp"

namespace provar {

std::string label_name(const Alphabet& alphabet, int label);

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

/// DOT rendering; the base vertex is double-circled.
std::string graph_to_dot(const LabeledGraph& g);

nlohmann::json closure_result_to_json(const ClosureResult& r);
nlohmann::json fringe_to_json(const Fringe& f);

/// One subgroup per line, words comma-separated, '#' starts a comment.
std::vector<std::vector<Word>> parse_subgroup_file(const std::string& text,
                                                   const Alphabet& alphabet);

}  // namespace provar

#endif  // PROVAR_IO_HPP
