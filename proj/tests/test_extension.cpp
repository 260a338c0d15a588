#include <gtest/gtest.h>

#include "campaigns.hpp"
#include "dimstruct/extension.hpp"
#include "fixtures.hpp"

using namespace dimstruct;
using fixtures::make_table;

namespace {
PreDimensionStructure Pre(Table t) { return PreDimensionStructure::validate(std::move(t)); }
} // namespace

TEST(Extend, LatticeInputIsUnchanged) {
  auto pre = Pre(fixtures::worked_example());
  auto res = extend(pre);
  EXPECT_TRUE(res.new_elements.empty());
  EXPECT_EQ(res.extended.table(), fixtures::worked_example());
}

TEST(Extend, BowtieGetsMissingMeet) {
  auto pre = Pre(fixtures::ax3_failure());
  EXPECT_FALSE(pre.satisfies_ax3());
  auto res = extend(pre);
  ASSERT_EQ(res.new_elements.size(), 1u);
  EXPECT_EQ(res.new_elements[0].name, "inf{p,q}");
  const auto& E = res.extended.poset();
  ASSERT_EQ(E.size(), 5u);
  const std::size_t h = E.index("inf{p,q}");
  for (const char* lo : {"a", "b"}) {
    EXPECT_TRUE(E.less(E.index(lo), h)) << lo;
  }
  for (const char* hi : {"p", "q"}) {
    EXPECT_TRUE(E.less(h, E.index(hi))) << hi;
  }
  EXPECT_TRUE(res.extended.mu(0, h).is_zero());
  EXPECT_EQ(res.extended.dim(0), DimValue::element(h));
  EXPECT_TRUE(check_principality_preserved(pre, res));
}

TEST(Extend, EqualClassesShareOneElement) {
  auto t = make_table(fixtures::bowtie(), {"x", "y"},
                      {{"x", {{"p", "0"}, {"q", "0"}}}, {"y", {{"p", "0"}, {"q", "0"}}}});
  auto res = extend(Pre(t));
  EXPECT_EQ(res.new_elements.size(), 1u);
  EXPECT_EQ(res.extended.dim(0), res.extended.dim(1));
}

TEST(Extend, NestedClassesAreOrderedByInclusion) {
  // Bowtie with a top t: S_x = {p, q, t} has lower bounds a, b only.
  auto P = FinitePoset::build({"a", "b", "p", "q", "t"},
                              {{"a", "p"}, {"a", "q"}, {"b", "p"}, {"b", "q"}, {"p", "t"}, {"q", "t"}});
  auto t = make_table(P, {"x"}, {{"x", {{"p", "0"}, {"q", "0"}, {"t", "0"}}}});
  auto res = extend(Pre(t));
  ASSERT_EQ(res.new_elements.size(), 1u);
  const auto& E = res.extended.poset();
  const std::size_t h = E.index(res.new_elements[0].name);
  EXPECT_TRUE(E.less(h, E.index("t")));
  EXPECT_TRUE(E.less(E.index("a"), h));
}

TEST(Extend, ValuesAreSupremaOverTheClass) {
  // z has finite values on p and q; its value on the new element is their sup.
  auto t = make_table(fixtures::bowtie(), {"x", "z"},
                      {{"x", {{"p", "0"}, {"q", "0"}}}, {"z", {{"a", "3"}, {"p", "0"}, {"q", "0"}}}});
  auto res = extend(Pre(t));
  const std::size_t h = res.extended.poset().index("inf{p,q}");
  EXPECT_TRUE(res.extended.mu(1, h).is_zero());
  EXPECT_EQ(res.extended.dim(1), DimValue::element(res.extended.poset().index("a")));
}

TEST(Extend, InvalidPreStructureIsRejected) {
  auto t = fixtures::chain_table({"0", "1"}, {{"x", {{"0", "1"}, {"1", "2"}}}}, {"x"});
  EXPECT_THROW(Pre(t), PreInvalid);
}

TEST(Extend, OffLatticeCompletionCanFail) {
  // inf S_x exists, so nothing is adjoined, yet the zero set stays without
  // an infimum.
  auto pre = Pre(fixtures::extension_failure());
  EXPECT_FALSE(pre.satisfies_ax3());
  try {
    (void)extend(pre);
    FAIL() << "expected PostValidationError";
  } catch (const PostValidationError& e) {
    ASSERT_FALSE(e.report().violations.empty());
    EXPECT_EQ(e.report().violations.front().axiom, Axiom::ax3);
  }
}

TEST(Embed, MeetGoesToTargetMeet) {
  auto pre = Pre(fixtures::ax3_failure());
  auto res = extend(pre);
  auto target = DimensionStructure::validate(fixtures::embed_target());
  auto r = embed_into(pre, res, target);
  EXPECT_TRUE(r.ok());
  const std::size_t h = res.extended.poset().index("inf{p,q}");
  EXPECT_EQ(r.f[h], target.poset().index("m"));
}

TEST(Embed, TargetMustContainThePreStructure) {
  auto pre = Pre(fixtures::ax3_failure());
  auto res = extend(pre);
  auto other = DimensionStructure::validate(fixtures::worked_example());
  EXPECT_THROW(embed_into(pre, res, other), NotASubstructure);

  // Same elements, different mu on S.
  auto P = FinitePoset::build({"a", "b", "p", "q", "m"}, {{"a", "m"}, {"b", "m"}, {"m", "p"}, {"m", "q"}});
  auto t = make_table(P, {"x"}, {{"x", {{"p", "0"}, {"q", "0"}, {"m", "0"}, {"b", "1"}}}});
  EXPECT_THROW(embed_into(pre, res, DimensionStructure::validate(t)), NotASubstructure);
}

TEST(Embed, NonPrincipalPreStructureIsRefused) {
  auto pre = Pre(fixtures::nonprincipal());
  auto res = extend(pre);
  EXPECT_THROW(embed_into(pre, res, res.extended), PreconditionError);
}

TEST(ExtensionLaws, Fuzz) {
  auto r = campaigns::extension_laws(7000, 300);
  EXPECT_EQ(r.instances, 300u);
  EXPECT_GE(r.exercised, 100u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}
