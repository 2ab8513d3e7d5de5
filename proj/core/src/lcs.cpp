#include "classic/lcs.hpp"

#include <deque>
#include <stdexcept>
#include <tuple>

#include "classic/canonicalize.hpp"

namespace classic {

namespace {

class ProductBuilder {
public:
  DescriptionGraph build(const DescriptionGraph& g1, NodeId r1, const DescriptionGraph& g2, NodeId r2) {
    auto key = std::make_tuple(&g1, r1, &g2, r2);
    if (auto it = memo_.find(key); it != memo_.end()) return rename_fresh(it->second);
    DescriptionGraph out = compute(g1, r1, g2, r2);
    memo_.emplace(key, out);
    return out;
  }

private:
  using Pair = std::pair<NodeId, NodeId>;

  DescriptionGraph compute(const DescriptionGraph& g1, NodeId r1, const DescriptionGraph& g2, NodeId r2) {
    if (g1.is_bottom()) return rename_fresh(g2.rooted_at(r2));
    if (g2.is_bottom()) return rename_fresh(g1.rooted_at(r1));

    DescriptionGraph out;
    out.nodes().clear();
    std::map<Pair, NodeId> ids;
    std::deque<Pair> queue;
    auto visit = [&](Pair p) {
      auto [it, fresh] = ids.emplace(p, 0);
      if (fresh) {
        it->second = fresh_node_id();
        queue.push_back(p);
      }
      return it->second;
    };
    out.set_root(visit({r1, r2}));
    while (!queue.empty()) {
      auto [n1, n2] = queue.front();
      queue.pop_front();
      const NodeId id = ids.at({n1, n2});
      out.nodes().emplace(id, pair_label(g1, n1, g2, n2));
      for (const auto& e1 : g1.out_edges(n1))
        for (const auto& e2 : g2.out_edges(n2))
          if (e1.attribute == e2.attribute) out.edges().insert(AEdge{id, e1.attribute, visit({e1.to, e2.to})});
    }
    return out;
  }

  NodeLabel pair_label(const DescriptionGraph& g1, NodeId n1, const DescriptionGraph& g2, NodeId n2) {
    const NodeLabel& l1 = g1.label(n1);
    const NodeLabel& l2 = g2.label(n2);
    if (l1.incoherent) return relabel(l2);
    if (l2.incoherent) return relabel(l1);
    NodeLabel l;
    for (const auto& a : l1.atoms)
      if (l2.atoms.count(a)) l.atoms.insert(a);
    for (const auto& h1 : l1.redges) {
      for (const auto& h2 : l2.redges) {
        if (h1.name != h2.name) continue;
        REdge r{h1.name, h1.attribute || h2.attribute, std::min(h1.min, h2.min), std::max(h1.max, h2.max),
                product_of(*h1.restriction, *h2.restriction)};
        l.redges.push_back(std::move(r));
      }
    }
    for (const auto& e1 : g1.out_edges(n1))
      for (const auto& h2 : l2.redges)
        if (h2.name == e1.attribute)
          l.redges.push_back(REdge{h2.name, true, 0, 1, build(g1, e1.to, *h2.restriction, h2.restriction->root())});
    for (const auto& h1 : l1.redges)
      for (const auto& e2 : g2.out_edges(n2))
        if (h1.name == e2.attribute)
          l.redges.push_back(REdge{h1.name, true, 0, 1, build(*h1.restriction, h1.restriction->root(), g2, e2.to)});
    return l;
  }

  DescriptionGraph product_of(const DescriptionGraph& a, const DescriptionGraph& b) {
    return build(a, a.root(), b, b.root());
  }

  // Copies a label; nested graphs get fresh ids so nesting stays disjoint.
  static NodeLabel relabel(const NodeLabel& l) {
    NodeLabel out = l;
    for (auto& r : out.redges) *r.restriction = rename_fresh(*r.restriction);
    return out;
  }

  std::map<std::tuple<const DescriptionGraph*, NodeId, const DescriptionGraph*, NodeId>, DescriptionGraph> memo_;
};

}  // namespace

DescriptionGraph product(const DescriptionGraph& g1, const DescriptionGraph& g2) {
  ProductBuilder b;
  return b.build(g1, g1.root(), g2, g2.root());
}

DescriptionGraph lcs_graph(const Concept& c, const Concept& d) {
  return canonicalize(product(canonical_graph(c), canonical_graph(d)));
}

DescriptionGraph lcs_graph(const std::vector<Concept>& cs) {
  if (cs.empty()) throw std::invalid_argument("lcs of an empty list");
  DescriptionGraph g = canonical_graph(cs.front());
  for (std::size_t i = 1; i < cs.size(); ++i) g = canonicalize(product(g, canonical_graph(cs[i])));
  return g;
}

Concept lcs2(const Concept& c, const Concept& d) { return graph_to_concept(lcs_graph(c, d), Semantics::Partial); }

Concept lcs_n(const std::vector<Concept>& cs) { return graph_to_concept(lcs_graph(cs), Semantics::Partial); }

}  // namespace classic
