#include <gtest/gtest.h>

#include "classic/canonicalize.hpp"
#include "classic/lcs.hpp"
#include "classic/subsumption.hpp"
#include "fixtures.hpp"

namespace classic {
namespace {

using testing::merged_ab;
using testing::looping_ab;
using testing::parse_with;

const std::string kSig = "@concept A B\n@role r\n@attribute a b c d\n";
Concept P(const std::string& text) { return parse_with(kSig, text); }

TEST(Product, MergedLoopingIsRootWithTwoSuccessors) {
  DescriptionGraph g = product(canonical_graph(merged_ab()), canonical_graph(looping_ab()));
  EXPECT_EQ(g.node_count(), 3u);
  auto a = g.walk({g.root()}, {"a"});
  auto b = g.walk({g.root()}, {"b"});
  ASSERT_EQ(a.size(), 1u);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_NE(*a.begin(), *b.begin());
}

TEST(Product, DiagonalReproducesTheGraph) {
  for (const Concept& c : {testing::lemon(), looping_ab(), testing::parity_concept(2, 3)}) {
    DescriptionGraph g = canonical_graph(c);
    EXPECT_TRUE(isomorphic(canonicalize(product(g, g)), g));
  }
}

TEST(Product, BottomOperandYieldsTheOther) {
  DescriptionGraph g = canonical_graph(looping_ab());
  EXPECT_TRUE(isomorphic(product(DescriptionGraph::bottom(), g), g));
  EXPECT_TRUE(isomorphic(product(g, DescriptionGraph::bottom()), g));
}

TEST(Product, IncoherentNodeTakesOtherLabel) {
  DescriptionGraph left;
  const NodeId dead = left.add_node(NodeLabel::bottom());
  left.add_edge(left.root(), "a", dead);
  DescriptionGraph right = concept_to_graph(P("(and (same-as (a) (a)) (all a A))"));
  right = canonicalize(right);
  DescriptionGraph g = product(left, right);
  auto succ = g.walk({g.root()}, {"a"});
  ASSERT_EQ(succ.size(), 1u);
  EXPECT_TRUE(g.label(*succ.begin()).atoms.count("A"));
}

TEST(Lcs, MergedLooping) {
  EXPECT_TRUE(equivalent(lcs2(merged_ab(), looping_ab()), P("(and (same-as (a) (a)) (same-as (b) (b)))"), Semantics::Partial));
}

TEST(Lcs, BottomIsNeutral) {
  for (const Concept& c : {looping_ab(), testing::lemon(), P("(and A (all r (at-least 2 r)))")})
    EXPECT_TRUE(equivalent(lcs2(Concept::bottom(), c), c, Semantics::Partial)) << print_concept(c);
}

TEST(Lcs, Idempotent) {
  for (const Concept& c : {looping_ab(), testing::lemon()}) EXPECT_TRUE(equivalent(lcs2(c, c), c, Semantics::Partial));
}

TEST(Lcs, NumberRestrictionsWiden) {
  Concept l = lcs2(P("(and (at-least 3 r) (at-most 4 r) (all r A))"), P("(and (at-least 1 r) (at-most 6 r) (all r (and A B)))"));
  EXPECT_TRUE(equivalent(l, P("(and (at-least 1 r) (at-most 6 r) (all r A))"), Semantics::Partial)) << print_concept(l);
}

TEST(Lcs, AttributeCrossCases) {
  Concept l = lcs2(P("(and (same-as (a) (a)) (all a (and A B)))"), P("(all a A)"));
  EXPECT_TRUE(equivalent(l, P("(all a A)"), Semantics::Partial)) << print_concept(l);
}

TEST(LcsN, FoldBase) {
  EXPECT_EQ(lcs_n({looping_ab()}), graph_to_concept(canonical_graph(looping_ab())));
  EXPECT_TRUE(equivalent(lcs_n({merged_ab(), looping_ab()}), lcs2(merged_ab(), looping_ab()), Semantics::Partial));
  EXPECT_THROW(lcs_n({}), std::invalid_argument);
}

TEST(LcsN, ParityFamilyGrows) {
  for (int n : {2, 3}) {
    std::vector<Concept> ds;
    for (int i = 1; i <= n; ++i) ds.push_back(testing::parity_concept(i, n));
    EXPECT_GE(lcs_graph(ds).node_count(), (1u << n) - 1);
  }
}

}  // namespace
}  // namespace classic
