#include "classic/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "classic/automaton.hpp"
#include "classic/canonicalize.hpp"
#include "classic/interpretation.hpp"
#include "classic/lcs.hpp"
#include "classic/lcs_total.hpp"
#include "classic/subsumption.hpp"

namespace classic::cli {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kVerbs{"parse", "normalize", "subsumes",   "equiv",       "sat",
                                      "lcs",   "lcs-exists", "graph", "oracle-check"};

struct Options {
  std::string verb;
  std::string input;
  Semantics mode = Semantics::Partial;
  bool dot = false;
  bool debug_automata = false;
  bool json = false;
  std::uint32_t max_domain = 3;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// What a verb produced: a boolean verdict or text, plus the graph the
/// statistics describe.
struct Outcome {
  std::optional<bool> verdict;
  std::string text;
  json witness;
  std::optional<DescriptionGraph> graph;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

const std::vector<Concept>& require_count(const std::vector<Concept>& cs, std::size_t n, const std::string& verb) {
  if (cs.size() < n)
    throw UsageError(verb + " needs " + std::to_string(n) + " concept" + (n == 1 ? "" : "s") + ", input has " +
                     std::to_string(cs.size()));
  return cs;
}

void require_S(const std::vector<Concept>& cs) {
  for (const auto& c : cs)
    if (!in_S_fragment(c))
      throw SemanticModeError("total semantics needs same-as/conjunction concepts; got " + print_concept(c));
}

json witness_json(const NonExistenceWitness& w) {
  json access = json::object();
  for (const auto& [name, word] : w.access) access[name] = word;
  json words = json::array();
  for (const auto& x : w.sample_words) words.push_back(x);
  return {{"side", w.configuration.side == Side::First ? "first" : "second"},
          {"nodes", access},
          {"attribute", w.configuration.attribute},
          {"first_letter", w.first_letter},
          {"pump", {{"prefix", w.pump.prefix}, {"loop", w.pump.loop}, {"suffix", w.pump.suffix}}},
          {"words", words}};
}

LcsTotalHooks automaton_hooks(const Options& o, std::ostream& err) {
  LcsTotalHooks hooks;
  if (!o.debug_automata) return hooks;
  hooks.on_automaton = [&err](const SameAsConfiguration& k, const PathAutomaton& a) {
    err << "// configuration h1=" << k.h1 << " h2=" << k.h2 << " p0=" << k.p0 << " e1=" << k.e1 << " e2=" << k.e2
        << " f=" << k.f << " a=" << k.attribute << "\n"
        << to_dot(a) << "\n";
  };
  return hooks;
}

std::string joined(const std::vector<Concept>& cs) {
  std::string s;
  for (const auto& c : cs) s += print_concept(c) + "\n";
  return s;
}

Outcome dispatch(const Options& o, const std::vector<Concept>& cs, std::ostream& err) {
  const bool total = o.mode == Semantics::Total;
  if (total) require_S(cs);
  Outcome r;
  if (o.verb == "parse") {
    r.text = joined(cs);
    if (!cs.empty()) r.graph = concept_to_graph(cs.front());
  } else if (o.verb == "normalize") {
    std::vector<Concept> normal;
    for (const auto& c : cs) normal.push_back(graph_to_concept(canonical_graph(c), o.mode));
    r.text = joined(normal);
    if (!cs.empty()) r.graph = canonical_graph(cs.front());
  } else if (o.verb == "graph") {
    require_count(cs, 1, o.verb);
    r.graph = canonical_graph(cs.front());
    r.text = to_dot(*r.graph);
  } else if (o.verb == "subsumes" || o.verb == "equiv") {
    require_count(cs, 2, o.verb);
    r.verdict = o.verb == "subsumes" ? subsumes(cs[0], cs[1], o.mode) : equivalent(cs[0], cs[1], o.mode);
    r.graph = canonical_graph(cs[0]);
  } else if (o.verb == "sat") {
    require_count(cs, 1, o.verb);
    // Every same-as concept holds at a single element whose attributes all
    // loop back to it.
    r.verdict = total || !is_inconsistent(cs[0]);
    r.graph = canonical_graph(cs[0]);
  } else if (o.verb == "lcs-exists") {
    require_count(cs, 2, o.verb);
    r.graph = canonical_graph(cs[0]);
    if (!total) {
      r.verdict = true;
    } else {
      LcsExistenceReport rep = check_lcs_exists(cs[0], cs[1], automaton_hooks(o, err));
      r.verdict = rep.exists;
      if (rep.witness) {
        r.witness = witness_json(*rep.witness);
        err << rep.witness->describe();
      }
    }
  } else if (o.verb == "lcs") {
    require_count(cs, 1, o.verb);
    if (!total) {
      r.graph = canonicalize(lcs_graph(cs));
    } else {
      Concept acc = cs.front();
      r.graph = canonical_graph(acc);
      for (std::size_t i = 1; i < cs.size(); ++i) {
        r.graph = lcs_total_graph(acc, cs[i], automaton_hooks(o, err));
        acc = graph_to_concept(*r.graph, Semantics::Total);
      }
    }
    r.text = print_concept(graph_to_concept(*r.graph, o.mode)) + "\n";
  } else if (o.verb == "oracle-check") {
    require_count(cs, 2, o.verb);
    const bool structural = subsumes(cs[0], cs[1], o.mode);
    auto cm = find_countermodel(cs[0], cs[1], o.max_domain, o.mode);
    std::ostringstream os;
    os << "subsumes: " << (structural ? "true" : "false") << "\n";
    if (cm) {
      os << "countermodel at element " << cm->element << ":\n" << cm->interpretation.describe();
      r.witness = {{"domain_size", cm->interpretation.domain_size},
                   {"element", cm->element},
                   {"interpretation", cm->interpretation.describe()}};
    } else {
      os << "countermodel: none up to domain size " << o.max_domain << "\n";
    }
    // True when the two procedures agree.
    r.verdict = structural != cm.has_value();
    if (!*r.verdict) err << "structural and model-based answers disagree\n";
    r.text = os.str();
    r.graph = canonical_graph(cs[0]);
  }
  return r;
}

void emit(const Options& o, const Outcome& r, double ms, std::ostream& out) {
  if (o.json) {
    json j;
    if (r.verdict) j["result"] = *r.verdict;
    else j["result"] = r.text.substr(0, r.text.find_last_not_of('\n') + 1);
    if (!r.witness.is_null()) j["witness"] = r.witness;
    j["stats"] = {{"nodes", r.graph ? r.graph->recursive_node_count() : 0},
                  {"edges", r.graph ? r.graph->recursive_edge_count() : 0},
                  {"time_ms", ms}};
    out << j.dump(2) << "\n";
    return;
  }
  if (r.verdict) {
    if (o.verb == "oracle-check") out << r.text;
    out << (*r.verdict ? "true" : "false") << "\n";
  } else {
    out << r.text;
  }
  if (o.dot && r.graph && o.verb != "graph") out << to_dot(*r.graph);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subsumption and least common subsumers for CLASSIC concepts with same-as", "classic"};
  app.add_option("verb", o.verb, "One of: parse normalize subsumes equiv sat lcs lcs-exists graph oracle-check")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("input", o.input, "Concept file, or - for stdin")->required();
  std::string semantics = "partial";
  app.add_option("--semantics", semantics, "Attribute semantics: partial or total")
      ->check(CLI::IsMember({"partial", "total"}));
  app.add_flag("--dot", o.dot, "Also print the canonical graph in DOT");
  app.add_flag("--debug-automata", o.debug_automata, "Print configuration automata to stderr");
  app.add_flag("--json", o.json, "Print {result, witness, stats} as JSON");
  app.add_option("--max-domain", o.max_domain, "Largest domain for oracle-check")->check(CLI::Range(1, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  o.mode = semantics == "total" ? Semantics::Total : Semantics::Partial;

  try {
    const auto start = std::chrono::steady_clock::now();
    ConceptFile file = parse_concept_file(read_input(o.input, in));
    Outcome r = dispatch(o, file.concepts, err);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(o, r, ms, out);
    return r.verdict && !*r.verdict ? kFalse : kTrue;
  } catch (const ParseError& e) {
    err << o.input << ":" << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const SemanticModeError& e) {
    err << e.what() << "\n";
    return kSemanticMode;
  } catch (const LcsNotExistError& e) {
    err << e.witness().describe();
    if (o.json) out << json{{"result", nullptr}, {"witness", witness_json(e.witness())}}.dump(2) << "\n";
    return kLcsNotExist;
  }
}

}  // namespace classic::cli
