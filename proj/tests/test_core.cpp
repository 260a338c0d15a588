#include <gtest/gtest.h>

#include "dimstruct/properties.hpp"
#include "dimstruct/propositions.hpp"
#include "dimstruct/random.hpp"
#include "dimstruct/structure.hpp"
#include "fixtures.hpp"

using namespace dimstruct;

namespace {

DimValue el(const DimensionStructure& D, const char* name) { return DimValue::element(D.element_index(name)); }

} // namespace

TEST(Core, WorkedExampleDims) {
  auto D = DimensionStructure::validate(fixtures::worked_example());
  EXPECT_EQ(D.dim(D.point_index("x")), el(D, "a"));
  EXPECT_EQ(D.dim(D.point_index("y")), el(D, "b"));
  EXPECT_EQ(D.dim(D.point_index("z")), el(D, "c"));
  EXPECT_EQ(D.dim(D.point_index("w")), el(D, "e"));
  const MuD mw = mu_D(D, D.point_index("w"));
  EXPECT_EQ(mw.dim, el(D, "e"));
  EXPECT_EQ(mw.value, ExtVal::zero());
}

TEST(Core, WorkedExampleOrder) {
  auto D = DimensionStructure::validate(fixtures::worked_example());
  auto p = [&](const char* n) { return D.point_index(n); };
  EXPECT_EQ(leq_D(D, p("x"), p("y")), DOrder::less_or_equal);
  EXPECT_EQ(leq_D(D, p("y"), p("w")), DOrder::less_or_equal);
  EXPECT_EQ(leq_D(D, p("x"), p("z")), DOrder::less_or_equal);
  EXPECT_EQ(leq_D(D, p("z"), p("w")), DOrder::less_or_equal);
  EXPECT_EQ(leq_D(D, p("y"), p("z")), DOrder::incomparable);
  EXPECT_EQ(leq_D(D, p("w"), p("x")), DOrder::greater);
  EXPECT_EQ(leq_D(D, p("x"), p("x")), DOrder::equal_class);
}

TEST(Core, WorkedExampleSpectrumAndClasses) {
  auto D = DimensionStructure::validate(fixtures::worked_example());
  const SpectrumSets sy = spectrum(D, D.point_index("y"));
  IndexSet bde{D.element_index("b"), D.element_index("d"), D.element_index("e")};
  std::sort(bde.begin(), bde.end());
  EXPECT_EQ(sy.zero, bde);
  auto r = classify(D);
  EXPECT_FALSE(r.normal.value);
  EXPECT_FALSE(r.quasi_normal.value);
  EXPECT_EQ(r.quasi_normal.witness->element, D.element_index("d"));
  EXPECT_TRUE(r.p_strong.value);
  EXPECT_FALSE(r.m_strong.value);
}

TEST(Core, WorkedExampleSynchronization) {
  auto D = DimensionStructure::validate(fixtures::worked_example());
  auto order = induced_point_order(D);
  auto s = check_synchronization(D, order, 2);
  EXPECT_TRUE(s.condition1);
  EXPECT_FALSE(s.condition2);
  IndexSet yz{D.point_index("y"), D.point_index("z")};
  EXPECT_EQ(s.condition2_witness, yz);
  EXPECT_EQ(s.witness_sup, D.point_index("w"));
  EXPECT_EQ(s.witness_sup_dims, el(D, "d"));
  EXPECT_EQ(s.witness_dim_sup, el(D, "e"));
  EXPECT_TRUE(sbar_less(D.poset(), *s.witness_sup_dims, *s.witness_dim_sup));

  auto eq = FinitePoset::antichain(D.table().points());
  EXPECT_TRUE(check_synchronization(D, eq, std::nullopt).synchronized());
  EXPECT_TRUE(check_synchronization(D, eq, 1).synchronized());
}

TEST(Core, AxiomViolations) {
  auto t = fixtures::chain_table({"s", "p"}, {{"x", {{"s", "1"}, {"p", "1"}}}}, {"x"});
  auto r = check_axioms(t);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].axiom, Axiom::ax1);
  EXPECT_EQ(r.violations[0].s, 0U);
  EXPECT_EQ(r.violations[0].p, 1U);
  EXPECT_THROW(DimensionStructure::validate(t), ValidationError);

  auto f = check_axioms(fixtures::ax3_failure());
  ASSERT_EQ(f.violations.size(), 1U);
  EXPECT_EQ(f.violations[0].axiom, Axiom::ax3);
  EXPECT_EQ(f.violations[0].zero_set, (IndexSet{2, 3}));

  auto A = FinitePoset::antichain({"s", "p"});
  auto t2 = fixtures::make_table(A, {"x"}, {{"x", {{"s", "2"}, {"p", "0"}}}});
  EXPECT_TRUE(check_axioms(t2).has(Axiom::ax2));
}

TEST(Core, TotalityChecked) {
  EXPECT_THROW(Table(FinitePoset::chain({"a"}), {"x"}, {}), TotalityError);
}

TEST(Core, MuExtended) {
  auto A = FinitePoset::antichain({"a", "b"});
  auto D = DimensionStructure::validate(fixtures::make_table(A, {"x"}, {{"x", {{"a", "3"}}}}));
  EXPECT_EQ(mu_extended(D, 0, DimValue::top()), ExtVal::zero());
  EXPECT_EQ(mu_extended(D, 0, DimValue::bottom()), ExtVal::infinity());
  EXPECT_EQ(mu_extended(D, 0, DimValue::element(0)), ExtVal::of(3));
  EXPECT_THROW(mu_extended(D, 5, DimValue::top()), UnknownPoint);
  EXPECT_TRUE(is_s_point(D, 0, 0));
  EXPECT_TRUE(is_dim_point(D, 0));
  EXPECT_EQ(D.dim(0), DimValue::element(0));

  auto C = FinitePoset::chain({"m", "n"});
  auto E = DimensionStructure::validate(fixtures::make_table(C, {"x"}, {{"x", {{"m", "0"}, {"n", "0"}}}}));
  EXPECT_EQ(E.dim(0), DimValue::element(0));
  EXPECT_EQ(mu_extended(E, 0, DimValue::bottom()), ExtVal::zero());
  EXPECT_FALSE(is_dim_point(E, 0));
}

TEST(Core, AllInfinitePoint) {
  auto A = FinitePoset::antichain({"a", "b"});
  auto D = DimensionStructure::validate(fixtures::make_table(A, {"x"}, {}));
  EXPECT_EQ(mu_D(D, 0), (MuD{DimValue::top(), ExtVal::zero()}));
}

TEST(Core, NonPrincipalFixture) {
  auto D = DimensionStructure::validate(fixtures::nonprincipal());
  EXPECT_EQ(D.dim(0), el(D, "bot"));
  auto r = classify(D);
  EXPECT_FALSE(r.principal.value);
  EXPECT_EQ(r.principal.witness->point, 0U);
  EXPECT_EQ(r.principal.witness->element, D.element_index("a"));
}

TEST(Core, OrderedIsPrincipal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = generate_random(seed, {}, GenMode::valid_general);
    if (!t.poset().is_chain()) {
      continue;
    }
    EXPECT_TRUE(classify(DimensionStructure::validate(t)).principal.value);
  }
}

TEST(Core, InducedOrderRejectsEqualClasses) {
  auto C = FinitePoset::chain({"a"});
  auto D = DimensionStructure::validate(fixtures::make_table(C, {"x", "y"}, {}));
  EXPECT_THROW(induced_point_order(D), NotAPartialOrder);
  EXPECT_THROW(make_point_order(D, {{"x", "y"}, {"y", "x"}}), NotAPartialOrder);
}

TEST(Core, Ax1Prime) {
  auto bad = fixtures::chain_table({"s", "p"}, {{"x", {{"s", "1"}, {"p", "1"}}}}, {"x"});
  auto r = check_ax1prime(bad);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_THROW(check_ax1prime(fixtures::ax3_failure()), ShapeError);
  // On chains, ax1' agrees with ax1 for raw tables.
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    auto t = generate_random(seed, {}, GenMode::raw);
    if (!t.poset().is_chain()) {
      continue;
    }
    EXPECT_EQ(check_ax1prime(t).holds, !check_axioms(t).has(Axiom::ax1)) << seed;
  }
}

TEST(Core, DiscreteBounds) {
  auto D = DimensionStructure::validate(
      fixtures::chain_table({"1", "2", "3"}, {{"x", {{"1", "0"}, {"2", "0"}, {"3", "0"}}}}, {"x"}));
  EXPECT_TRUE(discrete_bounds_check(D).holds);
  EXPECT_THROW(discrete_bounds_check(DimensionStructure::validate(fixtures::worked_example())), ShapeError);
}

TEST(Core, GeneratorDeterministicAndValid) {
  EXPECT_EQ(generate_random(1, {}, GenMode::valid_principal), generate_random(1, {}, GenMode::valid_principal));
  EXPECT_TRUE(classify(DimensionStructure::validate(generate_random(1, {}, GenMode::valid_principal)))
                  .principal.value);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (GenMode m : {GenMode::valid_principal, GenMode::valid_general}) {
      auto t = generate_random(seed, {}, m);
      auto r = check_axioms(t);
      ASSERT_TRUE(r.ok()) << seed << ": " << describe(t, r.violations.front());
      if (m == GenMode::valid_principal) {
        EXPECT_TRUE(classify(DimensionStructure::validate(t)).principal.value) << seed;
      }
    }
  }
}

TEST(Core, RawModeCoversEveryViolationKind) {
  bool seen[3] = {false, false, false};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    for (const auto& v : check_axioms(generate_random(seed, {}, GenMode::raw)).violations) {
      seen[static_cast<int>(v.axiom)] = true;
    }
  }
  EXPECT_TRUE(seen[0]);
  EXPECT_TRUE(seen[1]);
  EXPECT_TRUE(seen[2]);
}

TEST(Core, GeneralModeProducesNonPrincipal) {
  std::size_t non_principal = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto D = DimensionStructure::validate(generate_random(seed, {}, GenMode::valid_general));
    non_principal += classify(D).principal.value ? 0 : 1;
  }
  EXPECT_GT(non_principal, 0U);
}

TEST(Core, PropositionSuiteOnWorkedExample) {
  auto D = DimensionStructure::validate(fixtures::worked_example());
  auto order = induced_point_order(D);
  for (const auto& r : proposition_suite(D, &order)) {
    EXPECT_TRUE(r.passed) << r.id << " " << r.witness;
  }
}

TEST(Core, PropositionSuiteFuzz) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto D = DimensionStructure::validate(
        generate_random(seed, {}, seed % 2 ? GenMode::valid_general : GenMode::valid_principal));
    Rng rng(seed);
    auto order = random_point_order(rng, D);
    for (const auto& r : proposition_suite(D, &order)) {
      EXPECT_TRUE(r.passed) << seed << " " << r.id << " " << r.witness;
    }
  }
}

TEST(Core, ShrinkFindsSmallCounterexample) {
  // Shrink a raw table to a minimal ax2 violation.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = generate_random(seed, {}, GenMode::raw);
    if (!check_axioms(t).has(Axiom::ax2)) {
      continue;
    }
    auto small = shrink(t, [](const Table& c) { return check_axioms(c).has(Axiom::ax2); });
    EXPECT_TRUE(check_axioms(small).has(Axiom::ax2));
    EXPECT_EQ(small.num_points(), 1U);
    EXPECT_EQ(small.num_elements(), 2U);
    break;
  }
}
