#include "classic/subsumption.hpp"

#include "classic/canonicalize.hpp"

namespace classic {

namespace {

bool meet(const DescriptionGraph& g, NodeId from, const AttrChain& v, const AttrChain& w) {
  std::set<NodeId> a = g.walk({from}, v);
  if (a.empty()) return false;
  std::set<NodeId> b = g.walk({from}, w);
  for (NodeId n : b)
    if (a.count(n)) return true;
  return false;
}

const DescriptionGraph& top_graph() {
  static const DescriptionGraph g = DescriptionGraph::top();
  return g;
}

bool subsumes_at(const Concept& d, const DescriptionGraph& g, NodeId n) {
  const NodeLabel& l = g.label(n);
  using K = Concept::Kind;
  switch (d.kind()) {
    case K::Top: return true;
    case K::Name: return l.atoms.count(d.symbol()) != 0;
    case K::AtLeast:
      if (d.count() == 0) return true;
      for (const auto& r : l.redges)
        if (r.name == d.symbol() && r.min >= d.count()) return true;
      return false;
    case K::AtMost:
      for (const auto& r : l.redges)
        if (r.name == d.symbol() && r.max <= d.count()) return true;
      return false;
    case K::SameAs: return meet(g, n, d.lhs(), d.rhs());
    case K::All: {
      if (d.on_attribute()) {
        for (const auto& e : g.out_edges(n))
          if (e.attribute == d.symbol() && subsumes_at(d.body(), g, e.to)) return true;
      }
      for (const auto& r : l.redges)
        if (r.name == d.symbol() && subsumes_graph(d.body(), *r.restriction)) return true;
      return subsumes_graph(d.body(), top_graph());
    }
    case K::And:
      for (const auto& p : d.parts())
        if (!subsumes_at(p, g, n)) return false;
      return true;
  }
  return false;
}

bool subsumes_total_at(const Concept& d, const DescriptionGraph& g) {
  if (d.kind() == Concept::Kind::And) {
    for (const auto& p : d.parts())
      if (!subsumes_total_at(p, g)) return false;
    return true;
  }
  const AttrChain& v = d.lhs();
  const AttrChain& w = d.rhs();
  std::size_t common = 0;
  while (common < v.size() && common < w.size() && v[v.size() - 1 - common] == w[w.size() - 1 - common]) ++common;
  for (std::size_t k = common + 1; k-- > 0;) {
    AttrChain vp(v.begin(), v.end() - static_cast<std::ptrdiff_t>(k));
    AttrChain wp(w.begin(), w.end() - static_cast<std::ptrdiff_t>(k));
    if (meet(g, g.root(), vp, wp)) return true;
  }
  return false;
}

void require_S(const Concept& c, const char* which) {
  if (!in_S_fragment(c))
    throw SemanticModeError(std::string("total semantics needs same-as/conjunction concepts; ") + which +
                            " is " + print_concept(c));
}

}  // namespace

bool subsumes_graph(const Concept& d, const DescriptionGraph& g) {
  for (const auto& [id, l] : g.nodes())
    if (l.incoherent) return true;
  return subsumes_at(d, g, g.root());
}

bool subsumes_total_graph(const Concept& d, const DescriptionGraph& g) {
  require_S(d, "subsumer");
  if (!g.is_S_graph()) throw SemanticModeError("total semantics needs an S-graph");
  return subsumes_total_at(d, g);
}

bool subsumes(const Concept& c, const Concept& d) { return subsumes_graph(d, canonical_graph(c)); }

bool subsumes_total(const Concept& c, const Concept& d) {
  require_S(c, "subsumee");
  require_S(d, "subsumer");
  return subsumes_total_at(d, canonical_graph(c));
}

bool subsumes(const Concept& c, const Concept& d, Semantics mode) {
  return mode == Semantics::Partial ? subsumes(c, d) : subsumes_total(c, d);
}

bool is_inconsistent(const Concept& c) { return canonical_graph(c).is_bottom(); }

bool equivalent(const Concept& c, const Concept& d, Semantics mode) {
  return subsumes(c, d, mode) && subsumes(d, c, mode);
}

}  // namespace classic
