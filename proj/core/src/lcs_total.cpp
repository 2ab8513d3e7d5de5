#include "classic/lcs_total.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "classic/canonicalize.hpp"

namespace classic {

namespace {

void require_S(const Concept& c) {
  if (!in_S_fragment(c))
    throw SemanticModeError("total semantics needs same-as/conjunction concepts; got " + print_concept(c));
}

// Reachable part of the product of two S-graphs, keeping the pair of each
// product node.
struct SProduct {
  DescriptionGraph graph;
  std::map<std::pair<NodeId, NodeId>, NodeId> ids;
};

SProduct s_product(const DescriptionGraph& g1, const DescriptionGraph& g2) {
  SProduct p;
  p.graph.nodes().clear();
  std::deque<std::pair<NodeId, NodeId>> queue;
  auto visit = [&](NodeId a, NodeId b) {
    auto [it, fresh] = p.ids.emplace(std::make_pair(a, b), 0);
    if (fresh) {
      it->second = p.graph.add_node(NodeLabel::top());
      queue.emplace_back(a, b);
    }
    return it->second;
  };
  p.graph.set_root(visit(g1.root(), g2.root()));
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    const NodeId from = p.ids.at({a, b});
    for (const auto& e1 : g1.out_edges(a))
      for (const auto& e2 : g2.out_edges(b))
        if (e1.attribute == e2.attribute) p.graph.add_edge(from, e1.attribute, visit(e1.to, e2.to));
  }
  return p;
}

std::set<std::string> successors(const DescriptionGraph& g, NodeId n) {
  std::set<std::string> out;
  for (const auto& e : g.out_edges(n)) out.insert(e.attribute);
  return out;
}

AttrChain access_word(const DescriptionGraph& g, NodeId target) {
  std::map<NodeId, std::pair<NodeId, std::string>> parent;
  std::set<NodeId> seen{g.root()};
  std::deque<NodeId> queue{g.root()};
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    if (n == target) break;
    for (const auto& e : g.out_edges(n))
      if (seen.insert(e.to).second) {
        parent[e.to] = {n, e.attribute};
        queue.push_back(e.to);
      }
  }
  AttrChain w;
  for (NodeId n = target; parent.count(n); n = parent.at(n).first) w.push_back(parent.at(n).second);
  std::reverse(w.begin(), w.end());
  return w;
}

class Analysis {
public:
  Analysis(const Concept& c, const Concept& d) {
    require_S(c);
    require_S(d);
    graphs_[0] = canonical_graph(c);
    graphs_[1] = canonical_graph(d);
    Symbols syms;
    collect_symbols(c, syms);
    collect_symbols(d, syms);
    alphabet_ = syms.attributes;
    product_ = s_product(graphs_[0], graphs_[1]);
  }

  bool either_bottom() const { return graphs_[0].is_bottom() || graphs_[1].is_bottom(); }
  const DescriptionGraph& graph(int i) const { return graphs_[i]; }
  const SProduct& product() const { return product_; }
  const std::set<std::string>& alphabet() const { return alphabet_; }

  const DescriptionGraph& owner(Side s) const { return graphs_[s == Side::First ? 0 : 1]; }
  const DescriptionGraph& other(Side s) const { return graphs_[s == Side::First ? 1 : 0]; }

  NodeId product_node(Side s, NodeId h, NodeId p0) const {
    return s == Side::First ? product_.ids.at({h, p0}) : product_.ids.at({p0, h});
  }

  /// Visits configurations: sides in order, then p0, then h1 < h2, then
  /// (a, f) and ordered pairs e1 != e2.
  template <class F>
  void for_each_configuration(F&& visit) const {
    for (Side side : {Side::First, Side::Second}) {
      const DescriptionGraph& g = owner(side);
      std::map<NodeId, std::vector<NodeId>> by_p0;
      for (const auto& [pair, id] : product_.ids) {
        auto [x, y] = pair;
        if (side == Side::First)
          by_p0[y].push_back(x);
        else
          by_p0[x].push_back(y);
      }
      std::map<std::pair<std::string, NodeId>, std::vector<NodeId>> preds;
      for (const auto& e : g.edges()) preds[{e.attribute, e.to}].push_back(e.from);
      for (auto& [p0, hs] : by_p0) {
        std::sort(hs.begin(), hs.end());
        for (std::size_t i = 0; i < hs.size(); ++i)
          for (std::size_t j = i + 1; j < hs.size(); ++j)
            for (const auto& [af, es] : preds)
              for (NodeId e1 : es)
                for (NodeId e2 : es)
                  if (e1 != e2) visit(SameAsConfiguration{side, hs[i], hs[j], p0, e1, e2, af.second, af.first});
      }
    }
  }

  PathAutomaton language(const SameAsConfiguration& k, const std::set<std::string>& first) const {
    const DescriptionGraph& g = owner(k.side);
    return intersect_and_restrict(path_automaton(g, k.h1, k.e1, alphabet_), path_automaton(g, k.h2, k.e2, alphabet_),
                                  first);
  }

  std::set<std::string> free_letters(const SameAsConfiguration& k) const {
    std::set<std::string> used = successors(other(k.side), k.p0), out;
    std::set_difference(alphabet_.begin(), alphabet_.end(), used.begin(), used.end(),
                        std::inserter(out, out.end()));
    return out;
  }

  NonExistenceWitness witness(const SameAsConfiguration& k, const std::string& b, const PathAutomaton& a) const {
    NonExistenceWitness w;
    w.configuration = k;
    w.first_letter = b;
    w.pump = *find_pump(a);
    const std::size_t len = std::max<std::size_t>(
        4, w.pump.prefix.size() + 3 * w.pump.loop.size() + w.pump.suffix.size());
    w.sample_words = words_up_to(a, len);
    if (w.sample_words.size() > 16) w.sample_words.resize(16);
    const DescriptionGraph& g = owner(k.side);
    for (auto [name, id] : {std::pair<const char*, NodeId>{"h1", k.h1}, {"h2", k.h2}, {"e1", k.e1}, {"e2", k.e2},
                            {"f", k.f}})
      w.access[name] = access_word(g, id);
    w.access["p0"] = access_word(other(k.side), k.p0);
    w.first_path = access_word(product_.graph, product_node(k.side, k.h1, k.p0));
    w.second_path = access_word(product_.graph, product_node(k.side, k.h2, k.p0));
    return w;
  }

private:
  DescriptionGraph graphs_[2];
  SProduct product_;
  std::set<std::string> alphabet_;
};

std::string word_text(const AttrChain& w) {
  if (w.empty()) return "<eps>";
  std::string out;
  for (const auto& x : w) out += (out.empty() ? "" : ".") + x;
  return out;
}

LcsExistenceReport analyse(Analysis& an, const LcsTotalHooks& hooks) {
  LcsExistenceReport report;
  if (an.either_bottom()) return report;
  an.for_each_configuration([&](const SameAsConfiguration& k) {
    if (report.witness) return;
    ++report.configurations;
    const auto free = an.free_letters(k);
    if (hooks.on_automaton) hooks.on_automaton(k, an.language(k, free));
    for (const auto& b : free) {
      PathAutomaton a = an.language(k, {b});
      if (is_infinite(a)) {
        report.exists = false;
        report.witness = an.witness(k, b, a);
        return;
      }
    }
  });
  return report;
}

// Adds a trie for `words` whose root is `root`; returns the node for each word.
std::map<AttrChain, NodeId> graft_trie(DescriptionGraph& g, NodeId root, const std::vector<AttrChain>& words) {
  std::map<AttrChain, NodeId> node{{{}, root}};
  for (const auto& w : words) {
    AttrChain prefix;
    for (const auto& x : w) {
      NodeId parent = node.at(prefix);
      prefix.push_back(x);
      if (!node.count(prefix)) {
        NodeId n = g.add_node(NodeLabel::top());
        g.add_edge(parent, x, n);
        node[prefix] = n;
      }
    }
  }
  return node;
}

}  // namespace

std::string NonExistenceWitness::describe() const {
  std::ostringstream os;
  const auto& k = configuration;
  os << "lcs does not exist\n";
  os << "  configuration (nodes of the " << (k.side == Side::First ? "first" : "second")
     << " concept by access word, p0 in the other):\n";
  for (const char* name : {"h1", "h2", "p0", "e1", "e2", "f"}) os << "    " << name << " = " << word_text(access.at(name)) << "\n";
  os << "    attribute a = " << k.attribute << "\n";
  os << "    first letter b = " << first_letter << "\n";
  os << "  pumpable word: " << word_text(pump.prefix) << " (" << word_text(pump.loop) << ")* "
     << word_text(pump.suffix) << "\n";
  os << "  words:";
  for (const auto& w : sample_words) os << ' ' << word_text(w);
  os << "\n";
  return os.str();
}

LcsNotExistError::LcsNotExistError(NonExistenceWitness w)
    : std::runtime_error("lcs does not exist"), witness_(std::move(w)) {}

LcsExistenceReport check_lcs_exists(const Concept& c, const Concept& d, const LcsTotalHooks& hooks) {
  Analysis an(c, d);
  return analyse(an, hooks);
}

bool lcs_exists(const Concept& c, const Concept& d) { return check_lcs_exists(c, d).exists; }

DescriptionGraph lcs_total_graph(const Concept& c, const Concept& d, const LcsTotalHooks& hooks) {
  Analysis an(c, d);
  if (an.graph(0).is_bottom()) return rename_fresh(an.graph(1));
  if (an.graph(1).is_bottom()) return rename_fresh(an.graph(0));
  LcsExistenceReport report = analyse(an, hooks);
  if (!report.exists) throw LcsNotExistError(*report.witness);

  DescriptionGraph g = an.product().graph;
  an.for_each_configuration([&](const SameAsConfiguration& k) {
    const auto free = an.free_letters(k);
    const PathAutomaton trimmed = trim(an.language(k, free));
    std::vector<AttrChain> words = enumerate_finite(trimmed);
    for (const auto& w : words)
      if (w.size() >= trimmed.state_count) throw InternalError("lcs_total: word longer than the automaton allows");
    if (free.count(k.attribute) && k.h1 == k.e1 && k.h2 == k.e2) words.insert(words.begin(), AttrChain{});
    if (words.empty()) return;
    auto t1 = graft_trie(g, an.product_node(k.side, k.h1, k.p0), words);
    auto t2 = graft_trie(g, an.product_node(k.side, k.h2, k.p0), words);
    for (const auto& w : words) {
      NodeId join = g.add_node(NodeLabel::top());
      g.add_edge(t1.at(w), k.attribute, join);
      g.add_edge(t2.at(w), k.attribute, join);
    }
  });
  return canonicalize(g);
}

Concept lcs_total(const Concept& c, const Concept& d, const LcsTotalHooks& hooks) {
  return graph_to_concept(lcs_total_graph(c, d, hooks), Semantics::Total);
}

}  // namespace classic
