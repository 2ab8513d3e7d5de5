#include <gtest/gtest.h>

#include "classic/subsumption.hpp"
#include "fixtures.hpp"

namespace classic {
namespace {

using testing::merged_ab;
using testing::looping_ab;
using testing::parse_with;

const std::string kSig = "@concept A B\n@role r\n@attribute a b c d\n";

Concept P(const std::string& text) { return parse_with(kSig, text); }

TEST(Subsumes, Lemon) {
  EXPECT_TRUE(subsumes(testing::lemon(), testing::car()));
  EXPECT_FALSE(subsumes(testing::car(), testing::lemon()));
}

TEST(Subsumes, NumberRestrictions) {
  EXPECT_TRUE(subsumes(Concept::at_least(10, "repairs"), Concept::at_least(8, "repairs")));
  EXPECT_FALSE(subsumes(Concept::at_least(8, "repairs"), Concept::at_least(10, "repairs")));
  EXPECT_TRUE(subsumes(Concept::at_most(1, "r"), Concept::at_most(3, "r")));
  EXPECT_TRUE(subsumes(Concept::top(), Concept::at_least(0, "r")));
}

TEST(Subsumes, SuffixDoesNotCarryOverPartially) {
  EXPECT_FALSE(subsumes(P("(same-as (a) (b))"), P("(same-as (a c) (b c))")));
  EXPECT_TRUE(subsumes_total(P("(same-as (a) (b))"), P("(same-as (a c) (b c))")));
}

TEST(Subsumes, ValueRestrictionLookups) {
  EXPECT_TRUE(subsumes(P("(and (same-as (a) (a)) (all a A))"), P("(all a A)")));
  EXPECT_TRUE(subsumes(P("(all a (and A B))"), P("(all a A)")));
  EXPECT_TRUE(subsumes(P("A"), P("(all a TOP)")));
  EXPECT_TRUE(subsumes(P("A"), P("(all r TOP)")));
  EXPECT_FALSE(subsumes(P("A"), P("(all r A)")));
  EXPECT_TRUE(subsumes(P("(all r (at-least 2 r))"), P("(all r (at-least 1 r))")));
}

TEST(Subsumes, BottomIsBelowEverything) {
  EXPECT_TRUE(subsumes(Concept::bottom(), P("(and A (same-as (a b) (c)))")));
  EXPECT_FALSE(subsumes(P("A"), Concept::bottom()));
  EXPECT_TRUE(subsumes(P("(all r BOTTOM)"), P("(at-most 0 r)")));
  EXPECT_TRUE(subsumes(P("(at-most 0 r)"), P("(all r BOTTOM)")));
}

TEST(SubsumesTotal, Examples) {
  EXPECT_TRUE(subsumes_total(looping_ab(), P("(same-as (a d) (b d))")));
  EXPECT_FALSE(subsumes_total(merged_ab(), P("(same-as (a c) (b))")));
  EXPECT_TRUE(subsumes_total(looping_ab(), P("(same-as (a c c d) (b c d))")));
}

TEST(SubsumesTotal, RejectsOtherConstructors) {
  EXPECT_THROW(subsumes_total(P("A"), merged_ab()), SemanticModeError);
  EXPECT_THROW(subsumes_total(merged_ab(), P("(all a A)")), SemanticModeError);
  EXPECT_THROW(equivalent(merged_ab(), P("A"), Semantics::Total), SemanticModeError);
}

TEST(Inconsistent, Cases) {
  EXPECT_TRUE(is_inconsistent(Concept::conj({Concept::at_least(1, "r"), Concept::at_most(0, "r")})));
  EXPECT_FALSE(is_inconsistent(Concept::top()));
  EXPECT_TRUE(is_inconsistent(P("(at-least 2 a)")));
  EXPECT_FALSE(is_inconsistent(P("(all a BOTTOM)")));
}

TEST(Equivalent, Cases) {
  EXPECT_TRUE(equivalent(P("(same-as (a) (a))"), P("(at-least 1 a)"), Semantics::Partial));
  EXPECT_TRUE(equivalent(looping_ab(), looping_ab(), Semantics::Partial));
  EXPECT_TRUE(equivalent(looping_ab(), looping_ab(), Semantics::Total));
  EXPECT_TRUE(equivalent(Concept::same_as({}, {}), Concept::top(), Semantics::Total));
  EXPECT_FALSE(equivalent(Concept::same_as({"a"}, {"a"}), Concept::top(), Semantics::Partial));
  EXPECT_TRUE(equivalent(Concept::same_as({"a"}, {"a"}), Concept::top(), Semantics::Total));
}

TEST(Parity, TwoAttributes) {
  const std::vector<std::string> alphabet{"a1", "a2"};
  for (int i = 1; i <= 2; ++i) {
    Concept di = testing::parity_concept(i, 2);
    const std::string ai = testing::parity_attribute(i);
    for (const auto& v : testing::all_words(alphabet, 3))
      for (const auto& w : testing::all_words(alphabet, 3)) {
        auto count = [&](const AttrChain& x) { return std::count(x.begin(), x.end(), ai); };
        EXPECT_EQ(subsumes(di, Concept::same_as(v, w)), count(v) % 2 == count(w) % 2);
      }
  }
}

}  // namespace
}  // namespace classic
