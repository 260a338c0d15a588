#include <gtest/gtest.h>

#include "campaigns.hpp"
#include "dimstruct/morphisms.hpp"
#include "fixtures.hpp"

using namespace dimstruct;
using fixtures::chain_table;
using fixtures::make_table;

namespace {
DimensionStructure V(Table t) { return DimensionStructure::validate(std::move(t)); }
} // namespace

TEST(VerifyMap, IdentityIsIsomorphism) {
  auto D = V(fixtures::worked_example());
  const auto id = identity_map(D);
  for (auto k : {MapKind::morphism, MapKind::isomorphism, MapKind::semi_isomorphism}) {
    EXPECT_TRUE(verify_map(D, D, id, k).holds) << to_string(k);
  }
  auto tr = dim_transport_check(D, D, id, MapKind::isomorphism);
  EXPECT_TRUE(tr.holds);
}

TEST(VerifyMap, HalvingOneValue) {
  auto A = V(chain_table({"0", "1"}, {{"x", {{"0", "2"}, {"1", "0"}}}}, {"x"}));
  auto B = V(chain_table({"0", "1"}, {{"x", {{"0", "1"}, {"1", "0"}}}}, {"x"}));
  const auto id = identity_map(A);
  auto r = verify_map(A, B, id, MapKind::morphism);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.value_witness);
  EXPECT_EQ(*r.value_witness, (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_TRUE(verify_map(B, A, id, MapKind::morphism).holds);
  EXPECT_FALSE(verify_map(A, B, id, MapKind::isomorphism).holds);
  EXPECT_TRUE(verify_map(A, B, id, MapKind::semi_isomorphism).holds);
}

TEST(VerifyMap, OrderAndBijection) {
  auto A = V(chain_table({"0", "1"}, {}, {"x"}));
  StructureMap flip{{0}, {1, 0}};
  auto r = verify_map(A, A, flip, MapKind::morphism);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.order_witness);
  StructureMap squash{{0}, {0, 0}};
  EXPECT_TRUE(verify_map(A, A, squash, MapKind::morphism).holds);
  EXPECT_THROW(verify_map(A, A, squash, MapKind::isomorphism), ShapeError);
  EXPECT_THROW(make_map(A, A, {{"x", "x"}}, {{"0", "0"}}), ShapeError);
}

TEST(SignCollapse, Values) {
  auto D = V(chain_table({"0", "1"}, {{"x", {{"0", "7/2"}, {"1", "0"}}}}, {"x"}));
  auto C = sign_collapse(D);
  EXPECT_EQ(C.mu(0, 0), ExtVal::of(1));
  EXPECT_EQ(C.dim(0), D.dim(0));
  auto P = V(fixtures::worked_example());
  EXPECT_EQ(sign_collapse(P), P);
  EXPECT_TRUE(verify_map(D, C, identity_map(D), MapKind::semi_isomorphism).holds);
}

TEST(DimTransport, MorphismGuard) {
  // mu at dim is zero: the point is exempt.
  auto A = V(chain_table({"0", "1"}, {{"x", {{"0", "0"}, {"1", "0"}}}}, {"x"}));
  auto B = V(chain_table({"0", "1"}, {{"x", {{"0", "0"}, {"1", "0"}}}}, {"x"}));
  StructureMap up{{0}, {1, 1}};
  ASSERT_TRUE(verify_map(A, B, up, MapKind::morphism).holds);
  auto r = dim_transport_check(A, B, up, MapKind::morphism);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.exempt, std::vector<std::size_t>{0});
}

TEST(DimTransport, MorphismLemmaNeedsPrincipalTarget) {
  // Target non-principal: +inf sits above dim, so a positive value can be
  // mapped strictly above the target dim.
  auto A = V(chain_table({"a1"}, {{"x1", {{"a1", "5"}}}}, {"x1"}));
  auto B = V(fixtures::nonprincipal());
  auto m = make_map(A, B, {{"x1", "x"}}, {{"a1", "a"}});
  ASSERT_TRUE(verify_map(A, B, m, MapKind::morphism).holds);
  auto r = dim_transport_check(A, B, m, MapKind::morphism);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.failures, std::vector<std::size_t>{0});
}

TEST(DimTransport, SemiIsoNeedsOrderEmbedding) {
  // g is an order-preserving bijection whose inverse is not monotone.
  auto S1 = FinitePoset::antichain({"a", "b", "c"});
  auto S2 = FinitePoset::build({"a", "b", "c"}, {{"a", "b"}});
  fixtures::Rows row{{"x", {{"a", "0"}, {"b", "0"}}}};
  auto A = V(make_table(S1, {"x"}, row));
  auto B = V(make_table(S2, {"x"}, row));
  const auto id = identity_map(A);
  ASSERT_TRUE(verify_map(A, B, id, MapKind::semi_isomorphism).holds);
  EXPECT_TRUE(A.dim(0).is_bottom());
  EXPECT_EQ(B.dim(0), DimValue::element(0));
  EXPECT_FALSE(dim_transport_check(A, B, id, MapKind::semi_isomorphism).holds);
}

TEST(Pushforward, IdentityBreachAndShape) {
  auto D = V(chain_table({"0", "1", "2"}, {{"x", {{"1", "2"}, {"2", "0"}}}, {"y", {{"2", "3"}}}}, {"x", "y"}));
  std::vector<std::size_t> id{0, 1};
  EXPECT_TRUE(pushforward_check(D, id, D.table()).holds);
  EXPECT_TRUE(pushforward_check(D, id, D.table(), PushMode::sign).holds);

  Table bad = D.table();
  bad.at(0, 1) = ExtVal::zero();
  auto r = pushforward_check(D, id, bad);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.condition1_witness);
  EXPECT_EQ(*r.condition1_witness, (std::pair<std::size_t, std::size_t>{0, 1}));

  Table pos = D.table();
  pos.at(0, 2) = ExtVal::of(1);
  auto r2 = pushforward_check(D, id, pos);
  EXPECT_FALSE(r2.holds);
  EXPECT_EQ(*r2.condition2_witness, (std::pair<std::size_t, std::size_t>{0, 2}));

  Table one(D.poset(), {"y0", "y1"});
  EXPECT_THROW(pushforward_check(D, {0, 0}, one), NotSurjective);
  auto N = V(fixtures::nonprincipal());
  EXPECT_THROW(pushforward_check(N, {0}, N.table()), ShapeError);

  auto F = fiber_sup(D, {"y"}, {0, 0});
  EXPECT_TRUE(pushforward_check(D, {0, 0}, F).holds);
  EXPECT_EQ(F.at(0, 1), ExtVal::infinity());
  EXPECT_EQ(F.at(0, 2), ExtVal::of(3));
}

TEST(MorphismLaws, Fuzz) {
  for (const auto& r : campaigns::morphism_campaigns(5000, 200)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures; " << r.first_failure;
  }
}
