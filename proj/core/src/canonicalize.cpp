#include "classic/canonicalize.hpp"

#include <algorithm>

namespace classic {

namespace {

constexpr std::size_t kBudgetFactor = 64;
constexpr std::size_t kMinBudget = 100000;

class StepBudget {
public:
  explicit StepBudget(std::size_t size) {
    const std::size_t s = std::max<std::size_t>(size, 1);
    left_ = std::max(kMinBudget, kBudgetFactor * s * s * s);
  }
  void tick() {
    if (left_-- == 0) throw InternalError("canonicalize: step budget exhausted");
  }

private:
  std::size_t left_;
};

bool is_top_graph(const DescriptionGraph& g) {
  if (g.node_count() != 1 || !g.edges().empty()) return false;
  const NodeLabel& l = g.label(g.root());
  if (l.incoherent || !l.redges.empty()) return false;
  return std::all_of(l.atoms.begin(), l.atoms.end(), [](const std::string& a) { return a == kTopAtom; });
}

bool is_vacuous(const REdge& r) { return r.min == 0 && r.max == kUnbounded && is_top_graph(*r.restriction); }

bool has_edge_for(const DescriptionGraph& g, NodeId n, const std::string& attribute) {
  auto it = g.edges().lower_bound(AEdge{n, attribute, 0});
  return it != g.edges().end() && it->from == n && it->attribute == attribute;
}

bool can_lift(const DescriptionGraph& g, NodeId n, const REdge& r) {
  if (!r.attribute || !has_edge_for(g, n, r.name)) return false;
  return r.max == 1 || (r.max == 0 && r.restriction->is_bottom());
}

// Replaces nodes a and b by a single node carrying the merged label.
void merge_nodes(DescriptionGraph& g, NodeId a, NodeId b) {
  NodeId m = g.add_node(merge_labels(g.label(a), g.label(b)));
  g.nodes().erase(a);
  g.nodes().erase(b);
  auto subst = [&](NodeId n) { return n == a || n == b ? m : n; };
  std::set<AEdge> edges;
  for (const auto& e : g.edges()) edges.insert(AEdge{subst(e.from), e.attribute, subst(e.to)});
  g.edges() = std::move(edges);
  if (g.root() == a || g.root() == b) g.set_root(m);
}

void lift(DescriptionGraph& g, NodeId n, std::size_t redge_index) {
  NodeLabel& l = g.label(n);
  REdge r = std::move(l.redges[redge_index]);
  l.redges.erase(l.redges.begin() + static_cast<std::ptrdiff_t>(redge_index));
  DescriptionGraph nested = rename_fresh(*r.restriction);
  for (auto& [id, nl] : nested.nodes()) g.nodes().emplace(id, std::move(nl));
  for (const auto& e : nested.edges()) g.edges().insert(e);
  g.add_edge(n, r.name, nested.root());
}

DescriptionGraph normalize(const DescriptionGraph& input, StepBudget& budget);

// Rules 2-7 on a single coherent node. Returns true if anything changed.
bool normalize_label(NodeLabel& l, StepBudget& budget) {
  bool changed = false;
  // 3
  if (!l.atoms.count(std::string(kTopAtom))) {
    l.atoms.insert(std::string(kTopAtom));
    changed = true;
  }
  for (auto& r : l.redges) {
    // 2
    if (r.min > r.max) {
      l = NodeLabel::bottom();
      return true;
    }
    // 4
    if (r.restriction->is_bottom() && r.max != 0) {
      r.max = 0;
      changed = true;
    }
    // 5
    if (r.max == 0 && !r.restriction->is_bottom()) {
      *r.restriction = DescriptionGraph::bottom();
      changed = true;
    }
  }
  // 6
  auto vacuous = std::remove_if(l.redges.begin(), l.redges.end(), is_vacuous);
  if (vacuous != l.redges.end()) {
    l.redges.erase(vacuous, l.redges.end());
    changed = true;
  }
  // 7
  for (std::size_t i = 0; i < l.redges.size(); ++i) {
    for (std::size_t j = i + 1; j < l.redges.size(); ++j) {
      if (l.redges[i].name != l.redges[j].name) continue;
      REdge& a = l.redges[i];
      const REdge& b = l.redges[j];
      a.min = std::max(a.min, b.min);
      a.max = std::min(a.max, b.max);
      *a.restriction = normalize(merge_graphs(*a.restriction, *b.restriction), budget);
      l.redges.erase(l.redges.begin() + static_cast<std::ptrdiff_t>(j));
      return true;
    }
  }
  return changed;
}

DescriptionGraph normalize(const DescriptionGraph& input, StepBudget& budget) {
  DescriptionGraph g = prune_unreachable(input);
  for (auto& [id, l] : g.nodes())
    for (auto& r : l.redges) *r.restriction = normalize(*r.restriction, budget);

  for (;;) {
    budget.tick();
    // 1
    if (std::any_of(g.nodes().begin(), g.nodes().end(), [](const auto& kv) { return kv.second.incoherent; }))
      return DescriptionGraph::bottom();

    bool changed = false;
    for (auto& [id, l] : g.nodes()) changed |= normalize_label(l, budget);
    if (changed) continue;

    // 9
    bool lifted = false;
    for (auto& [id, l] : g.nodes()) {
      for (std::size_t i = 0; i < l.redges.size(); ++i) {
        if (can_lift(g, id, l.redges[i])) {
          lift(g, id, i);
          lifted = true;
          break;
        }
      }
      if (lifted) break;
    }
    if (lifted) continue;

    // 8
    bool merged = false;
    const AEdge* prev = nullptr;
    for (const auto& e : g.edges()) {
      if (prev && prev->from == e.from && prev->attribute == e.attribute) {
        NodeId a = prev->to, b = e.to;
        merge_nodes(g, a, b);
        merged = true;
        break;
      }
      prev = &e;
    }
    if (merged) continue;
    break;
  }
  return prune_unreachable(std::move(g));
}

}  // namespace

DescriptionGraph canonicalize(const DescriptionGraph& g) {
  StepBudget budget(g.recursive_node_count() + g.recursive_edge_count());
  return normalize(g, budget);
}

DescriptionGraph canonical_graph(const Concept& c) { return canonicalize(concept_to_graph(c)); }

bool is_canonical(const DescriptionGraph& g) {
  if (g.is_bottom()) return true;
  for (const auto& [id, l] : g.nodes()) {
    if (l.incoherent) return false;                         // 1
    if (!l.atoms.count(std::string(kTopAtom))) return false;  // 3
    std::set<std::string> names;
    for (const auto& r : l.redges) {
      if (r.min > r.max) return false;                                    // 2
      if (r.restriction->is_bottom() != (r.max == 0)) return false;       // 4, 5
      if (is_vacuous(r)) return false;                                    // 6
      if (!names.insert(r.name).second) return false;                     // 7
      if (can_lift(g, id, r)) return false;                               // 9
      if (!is_canonical(*r.restriction)) return false;
    }
  }
  const AEdge* prev = nullptr;
  for (const auto& e : g.edges()) {
    if (prev && prev->from == e.from && prev->attribute == e.attribute) return false;  // 8
    prev = &e;
  }
  return true;
}

}  // namespace classic
