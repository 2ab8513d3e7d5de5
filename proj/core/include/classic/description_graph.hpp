#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "classic/common.hpp"
#include "classic/concept.hpp"

namespace classic {

using NodeId = std::uint64_t;

/// Upper bound of an r-edge without a maximum.
inline constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

/// Atom standing for TOP inside node labels.
inline constexpr std::string_view kTopAtom = "TOP";

/// Globally fresh node id. Thread-safe.
NodeId fresh_node_id();

/// Heap-allocated value with deep-copy semantics; lets graphs nest by value.
template <class T>
class Box {
public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

private:
  std::unique_ptr<T> ptr_;
};

class DescriptionGraph;

/// Value restriction on a role or attribute together with its number bounds.
/// Attribute r-edges always have min 0 and max 0 or 1.
struct REdge {
  std::string name;
  bool attribute = false;
  std::uint32_t min = 0;
  std::uint32_t max = kUnbounded;
  Box<DescriptionGraph> restriction;
};

/// Either incoherent, or a set of atoms plus r-edges.
struct NodeLabel {
  bool incoherent = false;
  std::set<std::string> atoms;
  std::vector<REdge> redges;

  static NodeLabel bottom() { return NodeLabel{true, {}, {}}; }
  static NodeLabel top() { return NodeLabel{false, {std::string(kTopAtom)}, {}}; }
};

struct AEdge {
  NodeId from;
  std::string attribute;
  NodeId to;

  auto operator<=>(const AEdge&) const = default;
};

/// Rooted multigraph whose a-edges carry attribute names and whose nodes
/// carry labels with nested restriction graphs.
class DescriptionGraph {
public:
  DescriptionGraph();

  /// One node labelled {TOP}.
  static DescriptionGraph top();
  /// One incoherent node, no edges.
  static DescriptionGraph bottom();

  NodeId root() const { return root_; }
  void set_root(NodeId n) { root_ = n; }

  const std::map<NodeId, NodeLabel>& nodes() const { return nodes_; }
  std::map<NodeId, NodeLabel>& nodes() { return nodes_; }
  const std::set<AEdge>& edges() const { return edges_; }
  std::set<AEdge>& edges() { return edges_; }

  const NodeLabel& label(NodeId n) const;
  NodeLabel& label(NodeId n);
  bool contains(NodeId n) const { return nodes_.count(n) != 0; }

  NodeId add_node(NodeLabel label);
  void add_edge(NodeId from, std::string attribute, NodeId to);

  /// Out-edges of `n` in (attribute, target) order.
  std::vector<AEdge> out_edges(NodeId n) const;
  /// Targets reachable from any node of `from` along the word.
  std::set<NodeId> walk(const std::set<NodeId>& from, const AttrChain& word) const;

  /// Exactly the graph G(BOTTOM): a single incoherent node and no edges.
  bool is_bottom() const;
  /// No atoms besides TOP, no r-edges and no incoherent node.
  bool is_S_graph() const;

  /// Same graph rooted at `n`, restricted to nodes reachable from it.
  DescriptionGraph rooted_at(NodeId n) const;

  /// Number of nodes at this level.
  std::size_t node_count() const { return nodes_.size(); }
  /// Nodes including all nested restriction graphs.
  std::size_t recursive_node_count() const;
  std::size_t recursive_edge_count() const;

private:
  NodeId root_;
  std::map<NodeId, NodeLabel> nodes_;
  std::set<AEdge> edges_;
};

/// Copy of `g` with every node (nested ones included) renamed to a fresh id.
DescriptionGraph rename_fresh(const DescriptionGraph& g);

/// Removes nodes not reachable from the root, at every nesting level.
DescriptionGraph prune_unreachable(DescriptionGraph g);

/// Merge of two node labels: incoherence absorbs, otherwise union.
NodeLabel merge_labels(const NodeLabel& a, const NodeLabel& b);

/// G1 (+) G2: roots identified, everything else kept disjoint.
DescriptionGraph merge_graphs(const DescriptionGraph& g1, const DescriptionGraph& g2);

/// Translation of a concept description into its description graph.
DescriptionGraph concept_to_graph(const Concept& c);

/// Translation back into a concept via a breadth-first spanning tree.
/// Under total semantics the graph must be an S-graph and trivial v|v
/// conjuncts are left out.
Concept graph_to_concept(const DescriptionGraph& g, Semantics mode = Semantics::Partial);

/// A string that is equal for isomorphic graphs (exact for deterministic
/// graphs; nondeterministic ones are ordered by a label-based heuristic).
std::string canonical_form(const DescriptionGraph& g);
bool isomorphic(const DescriptionGraph& a, const DescriptionGraph& b);

/// Graphviz rendering. a-edges solid, r-edges dashed to the nested root,
/// incoherent nodes filled red, the root double-circled.
std::string to_dot(const DescriptionGraph& g, const std::string& name = "G");

}  // namespace classic
