#include "classic/description_graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>

namespace classic {

std::string_view to_string(Semantics s) { return s == Semantics::Partial ? "partial" : "total"; }

NodeId fresh_node_id() {
  static std::atomic<NodeId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

// --------------------------------------------------------- DescriptionGraph

DescriptionGraph::DescriptionGraph() : root_(fresh_node_id()) { nodes_.emplace(root_, NodeLabel::top()); }

DescriptionGraph DescriptionGraph::top() { return DescriptionGraph(); }

DescriptionGraph DescriptionGraph::bottom() {
  DescriptionGraph g;
  g.nodes_.begin()->second = NodeLabel::bottom();
  return g;
}

const NodeLabel& DescriptionGraph::label(NodeId n) const {
  auto it = nodes_.find(n);
  if (it == nodes_.end()) throw InternalError("unknown node " + std::to_string(n));
  return it->second;
}

NodeLabel& DescriptionGraph::label(NodeId n) {
  auto it = nodes_.find(n);
  if (it == nodes_.end()) throw InternalError("unknown node " + std::to_string(n));
  return it->second;
}

NodeId DescriptionGraph::add_node(NodeLabel label) {
  NodeId id = fresh_node_id();
  nodes_.emplace(id, std::move(label));
  return id;
}

void DescriptionGraph::add_edge(NodeId from, std::string attribute, NodeId to) {
  edges_.insert(AEdge{from, std::move(attribute), to});
}

std::vector<AEdge> DescriptionGraph::out_edges(NodeId n) const {
  std::vector<AEdge> out;
  for (auto it = edges_.lower_bound(AEdge{n, {}, 0}); it != edges_.end() && it->from == n; ++it) out.push_back(*it);
  return out;
}

std::set<NodeId> DescriptionGraph::walk(const std::set<NodeId>& from, const AttrChain& word) const {
  std::set<NodeId> cur = from;
  for (const auto& a : word) {
    std::set<NodeId> next;
    for (NodeId n : cur)
      for (auto it = edges_.lower_bound(AEdge{n, a, 0}); it != edges_.end() && it->from == n && it->attribute == a;
           ++it)
        next.insert(it->to);
    if (next.empty()) return next;
    cur = std::move(next);
  }
  return cur;
}

bool DescriptionGraph::is_bottom() const {
  return nodes_.size() == 1 && edges_.empty() && nodes_.begin()->second.incoherent;
}

bool DescriptionGraph::is_S_graph() const {
  for (const auto& [id, l] : nodes_) {
    if (l.incoherent || !l.redges.empty()) return false;
    for (const auto& atom : l.atoms)
      if (atom != kTopAtom) return false;
  }
  return true;
}

DescriptionGraph DescriptionGraph::rooted_at(NodeId n) const {
  if (!contains(n)) throw InternalError("rooted_at: unknown node");
  DescriptionGraph g = *this;
  g.root_ = n;
  std::set<NodeId> seen{n};
  std::deque<NodeId> queue{n};
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    for (auto it = edges_.lower_bound(AEdge{cur, {}, 0}); it != edges_.end() && it->from == cur; ++it)
      if (seen.insert(it->to).second) queue.push_back(it->to);
  }
  std::erase_if(g.nodes_, [&](const auto& kv) { return !seen.count(kv.first); });
  std::erase_if(g.edges_, [&](const AEdge& e) { return !seen.count(e.from); });
  return g;
}

std::size_t DescriptionGraph::recursive_node_count() const {
  std::size_t n = nodes_.size();
  for (const auto& [id, l] : nodes_)
    for (const auto& r : l.redges) n += r.restriction->recursive_node_count();
  return n;
}

std::size_t DescriptionGraph::recursive_edge_count() const {
  std::size_t n = edges_.size();
  for (const auto& [id, l] : nodes_)
    for (const auto& r : l.redges) n += 1 + r.restriction->recursive_edge_count();
  return n;
}

// --------------------------------------------------------------- Operations

DescriptionGraph rename_fresh(const DescriptionGraph& g) {
  DescriptionGraph out;
  out.nodes().clear();
  std::map<NodeId, NodeId> ids;
  for (const auto& [id, l] : g.nodes()) {
    NodeLabel copy{l.incoherent, l.atoms, {}};
    for (const auto& r : l.redges) copy.redges.push_back(REdge{r.name, r.attribute, r.min, r.max, rename_fresh(*r.restriction)});
    ids[id] = out.add_node(std::move(copy));
  }
  for (const auto& e : g.edges()) out.add_edge(ids.at(e.from), e.attribute, ids.at(e.to));
  out.set_root(ids.at(g.root()));
  return out;
}

DescriptionGraph prune_unreachable(DescriptionGraph g) {
  DescriptionGraph out = g.rooted_at(g.root());
  for (auto& [id, l] : out.nodes())
    for (auto& r : l.redges) *r.restriction = prune_unreachable(std::move(*r.restriction));
  return out;
}

NodeLabel merge_labels(const NodeLabel& a, const NodeLabel& b) {
  if (a.incoherent || b.incoherent) return NodeLabel::bottom();
  NodeLabel out = a;
  out.atoms.insert(b.atoms.begin(), b.atoms.end());
  out.redges.insert(out.redges.end(), b.redges.begin(), b.redges.end());
  return out;
}

DescriptionGraph merge_graphs(const DescriptionGraph& g1, const DescriptionGraph& g2) {
  DescriptionGraph left = rename_fresh(g1);
  DescriptionGraph right = rename_fresh(g2);
  const NodeId r1 = left.root(), r2 = right.root();

  DescriptionGraph out;
  out.nodes().clear();
  NodeId merged = out.add_node(merge_labels(left.label(r1), right.label(r2)));
  out.set_root(merged);
  auto subst = [&](NodeId n) { return n == r1 || n == r2 ? merged : n; };
  for (auto* src : {&left, &right}) {
    for (auto& [id, l] : src->nodes())
      if (id != r1 && id != r2) out.nodes().emplace(id, std::move(l));
    for (const auto& e : src->edges()) out.add_edge(subst(e.from), e.attribute, subst(e.to));
  }
  return out;
}

// ------------------------------------------------------- concept -> graph

namespace {

DescriptionGraph single_node(NodeLabel label) {
  DescriptionGraph g;
  g.label(g.root()) = std::move(label);
  return g;
}

DescriptionGraph with_redge(std::string name, bool attribute, std::uint32_t min, std::uint32_t max,
                            DescriptionGraph restriction) {
  NodeLabel l = NodeLabel::top();
  l.redges.push_back(REdge{std::move(name), attribute, min, max, std::move(restriction)});
  return single_node(std::move(l));
}

DescriptionGraph same_as_graph(const AttrChain& lhs, const AttrChain& rhs) {
  DescriptionGraph g;
  const NodeId root = g.root();
  const NodeId end = (lhs.empty() || rhs.empty()) ? root : g.add_node(NodeLabel::top());
  for (const AttrChain* chain : {&lhs, &rhs}) {
    NodeId cur = root;
    for (std::size_t i = 0; i < chain->size(); ++i) {
      NodeId next = i + 1 == chain->size() ? end : g.add_node(NodeLabel::top());
      g.add_edge(cur, (*chain)[i], next);
      cur = next;
    }
  }
  return g;
}

}  // namespace

DescriptionGraph concept_to_graph(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: return DescriptionGraph::top();
    case K::Name: return single_node(NodeLabel{false, {c.symbol()}, {}});
    case K::AtLeast: return with_redge(c.symbol(), false, c.count(), kUnbounded, DescriptionGraph::top());
    case K::AtMost: return with_redge(c.symbol(), false, 0, c.count(), DescriptionGraph::top());
    case K::SameAs: return same_as_graph(c.lhs(), c.rhs());
    case K::All:
      if (c.on_attribute()) return with_redge(c.symbol(), true, 0, 1, concept_to_graph(c.body()));
      return with_redge(c.symbol(), false, 0, kUnbounded, concept_to_graph(c.body()));
    case K::And: {
      DescriptionGraph g = concept_to_graph(c.parts().front());
      for (std::size_t i = 1; i < c.parts().size(); ++i) g = merge_graphs(g, concept_to_graph(c.parts()[i]));
      return g;
    }
  }
  throw InternalError("concept_to_graph: unknown constructor");
}

// ------------------------------------------------------- graph -> concept

namespace {

Concept conjunction_of(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  for (auto& p : parts) {
    if (p.kind() == Concept::Kind::Top) continue;
    if (p.kind() == Concept::Kind::And && !p.is_bottom_sugar()) {
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return Concept::top();
  if (flat.size() == 1) return std::move(flat.front());
  return Concept::conj(std::move(flat));
}

Concept wrap_all(const AttrChain& path, Concept body) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) body = Concept::all_attribute(*it, std::move(body));
  return body;
}

Concept label_to_concept(const NodeLabel& l) {
  if (l.incoherent) return Concept::bottom();
  std::vector<Concept> parts;
  for (const auto& atom : l.atoms)
    if (atom != kTopAtom) parts.push_back(Concept::name(atom));
  for (const auto& r : l.redges) {
    Concept body = graph_to_concept(*r.restriction, Semantics::Partial);
    if (r.attribute) {
      if (body.kind() != Concept::Kind::Top) parts.push_back(Concept::all_attribute(r.name, std::move(body)));
      continue;
    }
    if (r.min > 0) parts.push_back(Concept::at_least(r.min, r.name));
    if (r.max != kUnbounded) parts.push_back(Concept::at_most(r.max, r.name));
    if (body.kind() != Concept::Kind::Top) parts.push_back(Concept::all(r.name, std::move(body)));
  }
  return conjunction_of(std::move(parts));
}

}  // namespace

Concept graph_to_concept(const DescriptionGraph& g, Semantics mode) {
  if (mode == Semantics::Total && !g.is_S_graph())
    throw SemanticModeError("total-semantics translation needs a graph without atoms or r-edges");

  // Breadth-first spanning tree; out-edges are visited in (attribute, id) order.
  std::map<NodeId, AttrChain> path;
  std::vector<NodeId> order;
  std::set<AEdge> tree;
  std::set<NodeId> has_child;
  path[g.root()] = {};
  order.push_back(g.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    for (const auto& e : g.out_edges(n)) {
      if (path.count(e.to)) continue;
      AttrChain p = path[n];
      p.push_back(e.attribute);
      path[e.to] = std::move(p);
      order.push_back(e.to);
      tree.insert(e);
      has_child.insert(n);
    }
  }

  std::vector<Concept> parts;
  if (mode == Semantics::Partial) {
    for (NodeId n : order)
      if (n != g.root() && !has_child.count(n)) parts.push_back(Concept::same_as(path[n], path[n]));
  }
  for (const auto& e : g.edges()) {
    if (tree.count(e) || !path.count(e.from)) continue;
    AttrChain lhs = path[e.from];
    lhs.push_back(e.attribute);
    parts.push_back(Concept::same_as(std::move(lhs), path[e.to]));
  }
  if (mode == Semantics::Partial) {
    for (NodeId n : order) {
      Concept cn = label_to_concept(g.label(n));
      if (cn.kind() != Concept::Kind::Top) parts.push_back(wrap_all(path[n], std::move(cn)));
    }
  }
  return conjunction_of(std::move(parts));
}

// ------------------------------------------------------------- isomorphism

namespace {

std::string label_form(const NodeLabel& l) {
  if (l.incoherent) return "!";
  std::string s = "{";
  for (const auto& a : l.atoms) s += a + ",";
  s += "}[";
  std::vector<std::string> rs;
  for (const auto& r : l.redges) {
    rs.push_back(r.name + (r.attribute ? "@" : "") + ":" + std::to_string(r.min) + ":" +
                 (r.max == kUnbounded ? std::string("inf") : std::to_string(r.max)) + ":" +
                 canonical_form(*r.restriction));
  }
  std::sort(rs.begin(), rs.end());
  for (const auto& r : rs) s += r + ";";
  return s + "]";
}

}  // namespace

std::string canonical_form(const DescriptionGraph& g) {
  std::map<NodeId, std::size_t> index;
  std::vector<NodeId> order{g.root()};
  index[g.root()] = 0;
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    auto edges = g.out_edges(n);
    std::stable_sort(edges.begin(), edges.end(), [&](const AEdge& a, const AEdge& b) {
      if (a.attribute != b.attribute) return a.attribute < b.attribute;
      bool ka = index.count(a.to), kb = index.count(b.to);
      if (ka != kb) return ka;
      if (ka) return index[a.to] < index[b.to];
      return label_form(g.label(a.to)) < label_form(g.label(b.to));
    });
    out << i << label_form(g.label(n)) << "(";
    for (const auto& e : edges) {
      if (!index.count(e.to)) {
        index[e.to] = order.size();
        order.push_back(e.to);
      }
      out << e.attribute << ">" << index[e.to] << " ";
    }
    out << ")";
  }
  return out.str();
}

bool isomorphic(const DescriptionGraph& a, const DescriptionGraph& b) { return canonical_form(a) == canonical_form(b); }

// --------------------------------------------------------------------- DOT

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

void emit_dot(const DescriptionGraph& g, std::ostringstream& out) {
  for (const auto& [id, l] : g.nodes()) {
    std::string text;
    if (l.incoherent) {
      text = "BOTTOM";
    } else {
      for (const auto& a : l.atoms) text += (text.empty() ? "" : ",") + a;
    }
    out << "  n" << id << " [label=\"" << escape(text) << "\"";
    if (id == g.root()) out << ", shape=doublecircle";
    if (l.incoherent) out << ", style=filled, fillcolor=red";
    out << "];\n";
  }
  for (const auto& e : g.edges())
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << escape(e.attribute) << "\"];\n";
  for (const auto& [id, l] : g.nodes()) {
    for (const auto& r : l.redges) {
      emit_dot(*r.restriction, out);
      out << "  n" << id << " -> n" << r.restriction->root() << " [style=dashed, label=\"" << escape(r.name) << " ["
          << r.min << "," << (r.max == kUnbounded ? std::string("inf") : std::to_string(r.max)) << "]\"];\n";
    }
  }
}

}  // namespace

std::string to_dot(const DescriptionGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n  node [shape=circle];\n";
  emit_dot(g, out);
  out << "}\n";
  return out.str();
}

}  // namespace classic
