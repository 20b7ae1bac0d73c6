#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "provar/closures.hpp"
#include "provar/errors.hpp"
#include "provar/io.hpp"
#include "provar/lattice.hpp"
#include "provar/oracle.hpp"
#include "provar/reproduce.hpp"

namespace {

using namespace provar;

// Expands `a^3` to `aaa` (sugar only; the core parser takes plain letters).
std::string expand_sugar(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '^' && !out.empty() && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1, count = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        count = count * 10 + static_cast<std::size_t>(text[j++] - '0');
      char letter = out.back();
      if (count == 0)
        out.pop_back();
      else
        out.append(count - 1, letter);
      i = j - 1;
    } else {
      out += text[i];
    }
  }
  return out;
}

Alphabet resolve_alphabet(const std::string& flag,
                          const std::vector<std::string>& inputs) {
  if (!flag.empty()) return Alphabet::from_symbols(flag);
  std::set<char> seen;
  for (const std::string& s : inputs)
    for (char c : s)
      if (std::isalpha(static_cast<unsigned char>(c)))
        seen.insert(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (seen.empty()) throw Error("cannot infer an alphabet; pass -a");
  return Alphabet::from_symbols(std::string(seen.begin(), seen.end()));
}

void print_graph_text(const LabeledGraph& g) {
  std::cout << "vertices " << g.vertex_count() << "  base 0  edges "
            << g.edge_count() << "  rank " << g.rank() << "  index ";
  if (auto idx = g.index())
    std::cout << *idx;
  else
    std::cout << "infinite";
  std::cout << "\n";
  for (const Edge& e : g.edges())
    std::cout << "  " << e.from << " -" << label_name(g.alphabet(), e.label)
              << "-> " << e.to << "\n";
}

void emit_graph(const LabeledGraph& g, const std::string& format) {
  if (format == "json")
    std::cout << graph_to_json(g).dump(2) << "\n";
  else if (format == "dot")
    std::cout << graph_to_dot(g);
  else
    print_graph_text(g);
}

struct CommonOpts {
  std::string alphabet;
  std::string format = "text";
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-a,--alphabet", opts.alphabet,
                  "Generator symbols, e.g. ab (default: inferred)");
  cmd->add_option("-f,--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd->add_flag("-v,--verbose", opts.verbose, "Extra diagnostics");
}

ClosureOptions closure_options(const std::vector<long>& primes,
                               std::size_t fringe_cap, long max_prime,
                               bool cross_check) {
  ClosureOptions opt;
  if (!primes.empty()) opt.policy.base_primes = primes;
  if (fringe_cap) opt.fringe.max_vertices = fringe_cap;
  if (max_prime) opt.policy.max_prime = max_prime;
  opt.cross_check = cross_check;
  return opt;
}

int run(int argc, char** argv) {
  CLI::App app{"Stallings-automata computations in free groups: folding, "
               "Schreier bases, intersections, fringes, and pro-V closures"};
  app.require_subcommand(1);

  std::string gens_arg, second_arg, word_arg, variety_arg, only, input_file;
  std::vector<long> primes;
  std::size_t fringe_cap = 0, max_members = 0, max_order = 24;
  long max_prime = 0;
  bool cross_check = false, exit_status = false, as_json = false;

  CommonOpts fold_o;
  auto* cmd_fold = app.add_subcommand("fold", "Fold generators into the canonical subgroup graph");
  cmd_fold->add_option("generators", gens_arg, "Comma-separated words")->required();
  add_common(cmd_fold, fold_o);

  CommonOpts member_o;
  auto* cmd_member = app.add_subcommand("member", "Decide membership of a word in a subgroup");
  cmd_member->add_option("generators", gens_arg)->required();
  cmd_member->add_option("word", word_arg)->required();
  cmd_member->add_flag("--exit-status", exit_status, "Exit 1 on a negative answer");
  add_common(cmd_member, member_o);

  CommonOpts schreier_o;
  auto* cmd_schreier = app.add_subcommand("schreier", "Spanning tree, transversal and Schreier basis");
  cmd_schreier->add_option("generators", gens_arg)->required();
  add_common(cmd_schreier, schreier_o);

  CommonOpts intersect_o;
  auto* cmd_intersect = app.add_subcommand("intersect", "Intersection of two subgroups");
  cmd_intersect->add_option("generators", gens_arg)->required();
  cmd_intersect->add_option("generators2", second_arg)->required();
  add_common(cmd_intersect, intersect_o);

  CommonOpts join_o;
  auto* cmd_join = app.add_subcommand("join", "Join of two subgroups");
  cmd_join->add_option("generators", gens_arg)->required();
  cmd_join->add_option("generators2", second_arg)->required();
  add_common(cmd_join, join_o);

  CommonOpts fringe_o;
  auto* cmd_fringe = app.add_subcommand("fringe", "All overgroups (the fringe) of a subgroup");
  cmd_fringe->add_option("generators", gens_arg)->required();
  cmd_fringe->add_option("--fringe-cap", fringe_cap, "Vertex cap");
  cmd_fringe->add_option("--max-members", max_members, "Member cap");
  add_common(cmd_fringe, fringe_o);

  CommonOpts dense_o;
  auto* cmd_dense = app.add_subcommand("dense", "Decide pro-V denseness of a subgroup");
  cmd_dense->add_option("generators", gens_arg)->required();
  cmd_dense->add_option("--variety", variety_arg, "ab:d | gp:p | hp:p | nil | su")->required();
  cmd_dense->add_flag("--cross-check", cross_check, "Verify H_p answers against the Magnus quotient");
  cmd_dense->add_flag("--exit-status", exit_status, "Exit 1 on a negative answer");
  add_common(cmd_dense, dense_o);

  CommonOpts closure_o;
  auto* cmd_closure = app.add_subcommand("closure", "Compute the pro-V closure of a subgroup");
  cmd_closure->add_option("generators", gens_arg)->required();
  cmd_closure->add_option("--variety", variety_arg, "ab:d | gp:p | hp:p | nil | su")->required();
  cmd_closure->add_option("--primes", primes, "Base primes for nil/su")->delimiter(',');
  cmd_closure->add_option("--fringe-cap", fringe_cap, "Vertex cap");
  cmd_closure->add_option("--max-prime", max_prime, "Prime scan bound for nil/su");
  cmd_closure->add_flag("--cross-check", cross_check, "Extra Magnus-quotient checks");
  add_common(cmd_closure, closure_o);

  CommonOpts verify_o;
  auto* cmd_verify = app.add_subcommand("verify", "Finite-group oracle self-checks (lemma suite)");
  cmd_verify->add_option("--max-order", max_order, "Catalog order bound (<= 64)");
  add_common(cmd_verify, verify_o);

  CommonOpts export_o;
  auto* cmd_export = app.add_subcommand("export", "Write a subgroup graph as JSON or DOT");
  cmd_export->add_option("generators", gens_arg, "Comma-separated words (or use --input)");
  cmd_export->add_option("--input", input_file, "Graph JSON file to re-export");
  add_common(cmd_export, export_o);
  export_o.format = "dot";

  auto* cmd_reproduce = app.add_subcommand("reproduce", "Run the full acceptance suite");
  cmd_reproduce->add_option("--only", only, "Run a single named check");
  cmd_reproduce->add_flag("--json", as_json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  gens_arg = expand_sugar(gens_arg);
  second_arg = expand_sugar(second_arg);
  word_arg = expand_sugar(word_arg);

  if (cmd_fold->parsed()) {
    Alphabet a = resolve_alphabet(fold_o.alphabet, {gens_arg});
    emit_graph(LabeledGraph::from_generators(parse_words(gens_arg, a), a),
               fold_o.format);
    return 0;
  }
  if (cmd_member->parsed()) {
    Alphabet a = resolve_alphabet(member_o.alphabet, {gens_arg, word_arg});
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    bool yes = g.member(Word::parse(word_arg, a));
    if (member_o.format == "json")
      std::cout << nlohmann::json{{"member", yes}}.dump() << "\n";
    else
      std::cout << (yes ? "true" : "false") << "\n";
    return yes || !exit_status ? 0 : 1;
  }
  if (cmd_schreier->parsed()) {
    Alphabet a = resolve_alphabet(schreier_o.alphabet, {gens_arg});
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    SchreierData sd = schreier(g);
    if (schreier_o.format == "json") {
      nlohmann::json j;
      j["graph"] = graph_to_json(g);
      j["transversal"] = nlohmann::json::array();
      for (const Word& w : sd.transversal) j["transversal"].push_back(w.format(a));
      j["basis"] = nlohmann::json::array();
      for (const Word& w : sd.basis) j["basis"].push_back(w.format(a));
      std::cout << j.dump(2) << "\n";
    } else {
      print_graph_text(g);
      std::cout << "transversal:";
      for (const Word& w : sd.transversal) std::cout << " " << w.format(a);
      std::cout << "\nbasis:";
      for (const Word& w : sd.basis) std::cout << " " << w.format(a);
      std::cout << "\n";
    }
    return 0;
  }
  if (cmd_intersect->parsed() || cmd_join->parsed()) {
    bool meet = cmd_intersect->parsed();
    CommonOpts& o = meet ? intersect_o : join_o;
    Alphabet a = resolve_alphabet(o.alphabet, {gens_arg, second_arg});
    LabeledGraph x = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    LabeledGraph y = LabeledGraph::from_generators(parse_words(second_arg, a), a);
    emit_graph(meet ? intersect(x, y) : join(x, y), o.format);
    return 0;
  }
  if (cmd_fringe->parsed()) {
    Alphabet a = resolve_alphabet(fringe_o.alphabet, {gens_arg});
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    FringeOptions opts;
    if (fringe_cap) opts.max_vertices = fringe_cap;
    if (max_members) opts.max_members = max_members;
    Fringe f = fringe(g, opts);
    if (fringe_o.format == "json") {
      std::cout << fringe_to_json(f).dump(2) << "\n";
    } else {
      std::cout << f.members.size() << " overgroups\n";
      for (const LabeledGraph& m : f.members) {
        std::cout << "--\n";
        print_graph_text(m);
      }
    }
    return 0;
  }
  if (cmd_dense->parsed()) {
    Alphabet a = resolve_alphabet(dense_o.alphabet, {gens_arg});
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    VarietySpec v = VarietySpec::parse(variety_arg);
    ClosureOptions opt = closure_options(primes, fringe_cap, max_prime, cross_check);
    bool yes = dense(g, v, opt);
    if (dense_o.verbose &&
        (v.kind == VarietySpec::Kind::Ab || v.kind == VarietySpec::Kind::Gp)) {
      ModSubgroup img = abelian_image(generators(g), v.param, a.size());
      std::cerr << "abelian image mod " << v.param << " (Howell form):\n";
      for (const auto& row : img.rows()) {
        std::cerr << " ";
        for (long x : row) std::cerr << " " << x;
        std::cerr << "\n";
      }
    }
    if (dense_o.format == "json")
      std::cout << nlohmann::json{{"dense", yes}, {"variety", v.str()}}.dump()
                << "\n";
    else
      std::cout << (yes ? "true" : "false") << "\n";
    return yes || !exit_status ? 0 : 1;
  }
  if (cmd_closure->parsed()) {
    Alphabet a = resolve_alphabet(closure_o.alphabet, {gens_arg});
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    VarietySpec v = VarietySpec::parse(variety_arg);
    ClosureOptions opt = closure_options(primes, fringe_cap, max_prime, cross_check);
    ClosureResult r = closure(g, v, opt);
    if (closure_o.format == "json") {
      std::cout << closure_result_to_json(r).dump(2) << "\n";
    } else if (closure_o.format == "dot") {
      std::cout << graph_to_dot(r.graph);
    } else {
      std::cout << "variety " << r.variety.str() << "  status "
                << (r.status == ClosureStatus::Exact ? "EXACT" : "SOUND_UPPER");
      if (!r.primes_used.empty()) {
        std::cout << "  primes_used";
        for (long p : r.primes_used) std::cout << " " << p;
      }
      std::cout << "\ngenerators:";
      for (const Word& w : generators(r.graph))
        std::cout << " " << w.format(a);
      std::cout << "\n";
      print_graph_text(r.graph);
      if (closure_o.verbose)
        for (const std::string& c : r.certificates)
          std::cout << "certificate: " << c << "\n";
    }
    for (const std::string& c : r.certificates)
      if (c.rfind("PolicyExhausted", 0) == 0) return 3;
    return 0;
  }
  if (cmd_verify->parsed()) {
    bool all_pass = true;
    auto report = [&](const std::string& prop, bool ok, const std::string& witness) {
      all_pass = all_pass && ok;
      std::cout << (ok ? "PASS" : "FAIL") << "  " << prop;
      if (!ok) std::cout << "  witness: " << witness;
      std::cout << "\n";
    };
    for (const FiniteGroup& g : catalog(max_order, std::nullopt)) {
      report("lemma fff on " + g.name(), verify_lemma_fff(g), g.name());
      report("lemma ff on " + g.name(), verify_lemma_ff(g), g.name());
      if (is_supersolvable(g))
        report("lemma fp on " + g.name(), verify_lemma_fp(g), g.name());
    }
    return all_pass ? 0 : 1;
  }
  if (cmd_export->parsed()) {
    LabeledGraph g;
    if (!input_file.empty()) {
      std::ifstream in(input_file);
      if (!in) throw Error("cannot read " + input_file);
      nlohmann::json j;
      in >> j;
      g = graph_from_json(j);
    } else if (!gens_arg.empty()) {
      Alphabet a = resolve_alphabet(export_o.alphabet, {gens_arg});
      g = LabeledGraph::from_generators(parse_words(gens_arg, a), a);
    } else {
      throw Error("export needs generators or --input");
    }
    emit_graph(g, export_o.format == "text" ? "dot" : export_o.format);
    return 0;
  }
  if (cmd_reproduce->parsed()) {
    std::vector<CheckResult> results = run_reproduction(only);
    if (results.empty()) throw Error("unknown check: " + only);
    bool all_pass = true;
    if (as_json) {
      nlohmann::json j = nlohmann::json::array();
      for (const CheckResult& c : results) {
        all_pass = all_pass && c.pass;
        j.push_back({{"name", c.name},
                     {"criterion", c.criterion},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"pass", c.pass}});
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (const CheckResult& c : results) {
        all_pass = all_pass && c.pass;
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                  << "\n      expected: " << c.expected
                  << "\n      actual:   " << c.actual << "\n";
      }
    }
    return all_pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const provar::FringeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const provar::OrderCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const provar::CertificateFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const provar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
