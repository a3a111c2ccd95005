#include <gtest/gtest.h>

#include <algorithm>

#include "setopt/instances.hpp"

using namespace setopt;

namespace {

std::vector<Condition> all_conditions() {
  std::vector<Condition> out(kTwelveConditions.begin(), kTwelveConditions.end());
  out.push_back(Condition::SR);
  out.push_back(Condition::WR);
  return out;
}

bool contains(const std::vector<Vec>& pts, const Vec& x) { return std::find(pts.begin(), pts.end(), x) != pts.end(); }

}  // namespace

TEST(Certify, ConditionNamesRoundTrip) {
  for (Condition c : all_conditions()) EXPECT_EQ(parse_condition(condition_name(c)), c);
  EXPECT_FALSE(parse_condition("nope"));
}

TEST(Certify, BuiltinExpectedTables) {
  for (const auto& name : builtin_names()) {
    const Instance inst = builtin(name);
    CertificationContext ctx(inst.map, inst.x0, inst.search);
    for (const auto& ex : inst.expected)
      EXPECT_EQ(ctx.certify(ex.condition, inst.testset).holds, ex.holds) << name << " " << condition_name(ex.condition);
  }
}

TEST(Certify, MintyGapWitnesses) {
  const Instance inst = build_r2_minty_gap();
  const ConditionVerdict weak = certify_mvi(inst.map, inst.x0, inst.testset, true, true);
  EXPECT_TRUE(weak.holds);
  const ConditionVerdict strong = certify_mvi(inst.map, inst.x0, inst.testset, true, false);
  EXPECT_FALSE(strong.holds);
  ASSERT_TRUE(strong.witness_x);
  EXPECT_EQ(*strong.witness_x, Vec{0});
  CertificationContext ctx(inst.map, inst.x0);
  const ClauseResult at0 = ctx.clause(Condition::mvi_M, {0});
  ASSERT_TRUE(at0.zstar);
  EXPECT_EQ(*at0.zstar, (Vec{-1, -1}));
}

TEST(Certify, MintyGapScalarClauseFailsBetweenTwoFifthsAndCandidate) {
  const Instance inst = build_r2_minty_gap();
  CertificationContext ctx(inst.map, inst.x0);
  EXPECT_TRUE(ctx.clause(Condition::mvi_M, {frac(2, 5) - frac(1, 100)}).holds);
  EXPECT_FALSE(ctx.clause(Condition::mvi_M, {frac(2, 5)}).holds);
  EXPECT_FALSE(ctx.clause(Condition::mvi_M, {frac(1, 2)}).holds);
}

TEST(Certify, TruncatedLinf) {
  const Instance inst = build_linf_truncated(5);
  const ConditionVerdict min = certify_min(inst.map, inst.x0, inst.testset);
  EXPECT_FALSE(min.holds);
  ASSERT_TRUE(min.witness_x);
  EXPECT_EQ(*min.witness_x, Vec{0});
  CertificationContext ctx(inst.map, inst.x0);
  const Rational top = linf_alpha(5) / 5;
  EXPECT_TRUE(ctx.clause(Condition::mvi_M, {frac(9, 10)}).holds);
  EXPECT_FALSE(ctx.clause(Condition::mvi_M, {frac(99, 100)}).holds);
  EXPECT_FALSE(ctx.clause(Condition::mvi_M, {top}).holds);
  EXPECT_TRUE(ctx.clause(Condition::mvi_M, {top - frac(1, 1000000000)}).holds);
}

TEST(Certify, StrongQuantifierExcludesEqualValues) {
  const Instance inst = build_linf_truncated(5);
  CertificationContext ctx(inst.map, inst.x0);
  // x = x0 itself has f(x) = f(x0).
  for (Condition c : {Condition::SVI_M, Condition::svi_M, Condition::MVI_M, Condition::mvi_M})
    EXPECT_TRUE(ctx.clause(c, inst.x0).excluded) << condition_name(c);
}

TEST(Certify, ParetoAgreesWithBruteForce) {
  const Instance inst = build_pareto_identity();
  const VectorMap& psi = *inst.map->vector_source();
  const ParetoSets ps = brute_force_pareto(psi, inst.testset);
  for (const auto& x0 : inst.testset.points) {
    EXPECT_EQ(certify_min(inst.map, x0, inst.testset).holds, contains(ps.efficient, x0)) << to_string(x0);
    EXPECT_EQ(certify_weak_min(inst.map, x0, inst.testset, WeakVariant::Plain).holds, contains(ps.weakly_efficient, x0));
  }
}

TEST(Certify, RandomVectorInstancesAgreeWithBruteForce) {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 60 && seed < 400; ++seed) {
    const Instance inst = generate_random(seed);
    if (!inst.map->vector_source()) continue;
    const ParetoSets ps = brute_force_pareto(*inst.map->vector_source(), inst.testset);
    for (const auto& x0 : inst.testset.points) {
      if (!inst.map->in_domain(x0)) continue;
      ++checked;
      EXPECT_EQ(certify_min(inst.map, x0, inst.testset).holds, contains(ps.efficient, x0)) << seed;
      EXPECT_EQ(certify_weak_min(inst.map, x0, inst.testset, WeakVariant::Plain).holds,
                contains(ps.weakly_efficient, x0))
          << seed;
    }
  }
  EXPECT_GE(checked, 60);
}

TEST(Certify, FailureWitnessesRecheck) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generate_random(seed);
    CertificationContext ctx(inst.map, inst.x0, inst.search);
    for (Condition c : all_conditions()) {
      const ConditionVerdict v = ctx.certify(c, inst.testset);
      if (v.holds) {
        EXPECT_FALSE(v.witness_x);
        continue;
      }
      ASSERT_TRUE(v.witness_x);
      CertificationContext fresh(inst.map, inst.x0, inst.search);
      const ClauseResult r = fresh.clause(c, *v.witness_x);
      EXPECT_FALSE(r.holds) << seed << " " << condition_name(c);
      EXPECT_FALSE(r.excluded);
    }
  }
}

TEST(Certify, MonotoneInTestSet) {
  for (std::uint64_t seed = 50; seed < 90; ++seed) {
    const Instance inst = generate_random(seed);
    const auto& pts = inst.testset.points;
    const TestSet small = TestSet::of(std::vector<Vec>(pts.begin(), pts.begin() + static_cast<long>(pts.size() / 2)));
    CertificationContext ctx(inst.map, inst.x0, inst.search);
    for (Condition c : kTwelveConditions)
      if (!ctx.certify(c, small).holds) EXPECT_FALSE(ctx.certify(c, inst.testset).holds) << seed;
  }
}

TEST(Certify, SubsetSearchesNeverBeatRegions) {
  // Regions decides every scalar test, so a witness found on the grid or on
  // the vertices implies a witness among the regions.
  for (std::uint64_t seed = 90; seed < 120; ++seed) {
    const Instance inst = generate_random(seed);
    WitnessSearch grid;
    grid.strategy = WitnessSearch::Strategy::Grid;
    grid.grid = 3;
    WitnessSearch verts;
    verts.strategy = WitnessSearch::Strategy::Vertices;
    CertificationContext full(inst.map, inst.x0), g(inst.map, inst.x0, grid), v(inst.map, inst.x0, verts);
    for (Condition c : kTwelveConditions) {
      if (!is_scalarized(c)) continue;
      const bool holds = full.certify(c, inst.testset).holds;
      if (g.certify(c, inst.testset).holds) EXPECT_TRUE(holds) << seed << condition_name(c);
      if (v.certify(c, inst.testset).holds) EXPECT_TRUE(holds) << seed << condition_name(c);
    }
  }
}

TEST(Certify, Caveats) {
  const Instance inst = build_pareto_identity();
  WitnessSearch verts;
  verts.strategy = WitnessSearch::Strategy::Vertices;
  CertificationContext ctx(inst.map, inst.x0, verts);
  const ConditionVerdict v = ctx.certify(Condition::svi_W, inst.testset);
  EXPECT_TRUE(v.holds);
  EXPECT_NE(std::find(v.caveats.begin(), v.caveats.end(), "testset-relative"), v.caveats.end());
  EXPECT_NE(std::find(v.caveats.begin(), v.caveats.end(), "incomplete-witness-search:vertices"), v.caveats.end());
  EXPECT_TRUE(ctx.certify(Condition::WMin, inst.testset).caveats == std::vector<std::string>{"testset-relative"});
}

TEST(Certify, CandidateOutsideDomainRejected) {
  const Instance inst = build_r2_minty_gap();
  EXPECT_THROW(CertificationContext(inst.map, {1}), ValidationError);
}

TEST(Certify, BaseGridPointsLieInBase) {
  auto C = OrderingCone::from_generators({{1, 0}, {1, 2}, {0, 1}, {1, 1}}, {1, 1});
  for (const auto& z : base_grid(*C, 4)) {
    EXPECT_TRUE(C->in_dual(z));
    EXPECT_EQ(dot(z, C->interior_point()), -1);
  }
}
