#include <gtest/gtest.h>

#include "classic/canonicalize.hpp"
#include "fixtures.hpp"

namespace classic {
namespace {

TEST(Canonicalize, LemonMatchesHandBuiltGraph) {
  DescriptionGraph g = canonical_graph(testing::lemon());
  EXPECT_TRUE(is_canonical(g));
  EXPECT_TRUE(isomorphic(g, testing::lemon_graph())) << to_dot(g);
}

TEST(Canonicalize, ConflictingBoundsAreIncoherent) {
  EXPECT_TRUE(canonical_graph(Concept::conj({Concept::at_least(3, "r"), Concept::at_most(2, "r")})).is_bottom());
  EXPECT_TRUE(canonical_graph(Concept::bottom()).is_bottom());
}

TEST(Canonicalize, NestedBottomOnlyClosesTheEdge) {
  DescriptionGraph g = canonical_graph(Concept::all("r", Concept::bottom()));
  ASSERT_FALSE(g.is_bottom());
  const auto& redges = g.label(g.root()).redges;
  ASSERT_EQ(redges.size(), 1u);
  EXPECT_EQ(redges[0].max, 0u);
  EXPECT_TRUE(redges[0].restriction->is_bottom());
}

TEST(Canonicalize, VacuousEdgesVanish) {
  DescriptionGraph g = canonical_graph(Concept::conj({Concept::all("r", Concept::top()), Concept::at_least(0, "r")}));
  EXPECT_TRUE(g.label(g.root()).redges.empty());
}

TEST(Canonicalize, SameRoleEdgesCombine) {
  DescriptionGraph g = canonical_graph(Concept::conj(
      {Concept::at_least(2, "r"), Concept::at_most(5, "r"), Concept::all("r", Concept::name("A"))}));
  const auto& redges = g.label(g.root()).redges;
  ASSERT_EQ(redges.size(), 1u);
  EXPECT_EQ(redges[0].min, 2u);
  EXPECT_EQ(redges[0].max, 5u);
  EXPECT_TRUE(redges[0].restriction->label(redges[0].restriction->root()).atoms.count("A"));
}

TEST(Canonicalize, AttributeEdgesMergeToDeterminism) {
  DescriptionGraph g = canonical_graph(testing::looping_ab());
  EXPECT_TRUE(is_canonical(g));
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.walk({g.root()}, {"a", "c", "c"}), g.walk({g.root()}, {"a"}));
  EXPECT_EQ(g.walk({g.root()}, {"a", "d"}), g.walk({g.root()}, {"b", "d"}));
}

TEST(Canonicalize, LiftsValueRestrictionIntoPath) {
  DescriptionGraph g = canonical_graph(Concept::conj({Concept::same_as({"a"}, {"a"}),
                                                      Concept::all_attribute("a", Concept::name("A"))}));
  EXPECT_TRUE(g.label(g.root()).redges.empty());
  auto succ = g.walk({g.root()}, {"a"});
  ASSERT_EQ(succ.size(), 1u);
  EXPECT_TRUE(g.label(*succ.begin()).atoms.count("A"));
}

TEST(Canonicalize, BottomBehindAPathIsIncoherent) {
  DescriptionGraph g = canonical_graph(Concept::conj({Concept::same_as({"a"}, {"a"}),
                                                      Concept::all_attribute("a", Concept::bottom())}));
  EXPECT_TRUE(g.is_bottom());
}

TEST(Canonicalize, Idempotent) {
  for (const Concept& c : {testing::lemon(), testing::looping_ab(), testing::parity_concept(1, 3), testing::tree_right(2)}) {
    DescriptionGraph g = canonical_graph(c);
    EXPECT_TRUE(is_canonical(g));
    EXPECT_TRUE(isomorphic(g, canonicalize(g)));
  }
}

TEST(Canonicalize, DetectsNonCanonicalGraphs) {
  EXPECT_FALSE(is_canonical(concept_to_graph(testing::lemon())));
  EXPECT_FALSE(is_canonical(concept_to_graph(testing::looping_ab())));
}

}  // namespace
}  // namespace classic
