#include <gtest/gtest.h>

#include "setopt/harness.hpp"

using namespace setopt;

TEST(Harness, TransferGrid) {
  const auto& g = transfer_grid();
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(g.front(), 0);
  EXPECT_EQ(g.back(), 1);
  for (const Rational& t : {frac(1, 16), frac(1, 4096), frac(4095, 4096), frac(3, 8)})
    EXPECT_NE(std::find(g.begin(), g.end(), t), g.end());
}

TEST(Harness, BuiltinsHaveNoViolations) {
  for (const auto& name : builtin_names()) {
    const HarnessReport r = run_implication_harness(builtin(name));
    EXPECT_EQ(r.count(EdgeStatus::Violation), 0) << name;
    EXPECT_EQ(r.count(EdgeStatus::Unresolved), 0) << name;
    EXPECT_EQ(r.verdicts.size(), 14u);
  }
}

TEST(Harness, MintyGapIsRecordedAsInteresting) {
  const HarnessReport r = run_implication_harness(builtin("r2-minty-gap"));
  EXPECT_TRUE(r.mvi_without_min);
  EXPECT_FALSE(r.verdict(Condition::SR).holds);
}

TEST(Harness, CorruptedExpectationIsAViolation) {
  Instance inst = builtin("pareto-identity");
  ASSERT_FALSE(inst.expected.empty());
  inst.expected.front().holds = !inst.expected.front().holds;
  const HarnessReport r = run_implication_harness(inst);
  EXPECT_EQ(r.count(EdgeStatus::Violation), 1);
  bool found = false;
  for (const auto& e : r.edges)
    if (e.status == EdgeStatus::Violation) found = e.group == "expected";
  EXPECT_TRUE(found);
}

TEST(Harness, VectorExtensionChainsAreChecked) {
  const HarnessReport r = run_implication_harness(builtin("pareto-identity"));
  int vector_edges = 0;
  for (const auto& e : r.edges)
    if (e.group == "vector" && e.status != EdgeStatus::Skipped) ++vector_edges;
  EXPECT_GE(vector_edges, 4);
  EXPECT_TRUE(r.verdict(Condition::SR).holds);
}

TEST(Harness, FiniteMStarEdgesNeedMStarSearch) {
  Instance inst = builtin("linf-truncated");
  for (const auto& e : run_implication_harness(inst).edges)
    if (e.group == "finite-mstar") EXPECT_EQ(e.status, EdgeStatus::Skipped);
  inst.search.strategy = WitnessSearch::Strategy::MStar;
  inst.search.mstar = inst.map->cone()->base_vertices();
  const HarnessReport r = run_implication_harness(inst);
  int active = 0;
  for (const auto& e : r.edges)
    if (e.group == "finite-mstar" && e.status != EdgeStatus::Skipped) ++active;
  EXPECT_GT(active, 0);
  EXPECT_EQ(r.count(EdgeStatus::Violation), 0);
}

TEST(Harness, CampaignIsDeterministicAcrossThreadCounts) {
  CampaignOptions a;
  a.count = 24;
  a.seed = 11;
  a.threads = 1;
  CampaignOptions b = a;
  b.threads = 4;
  const CampaignSummary s = run_random_campaign(a), t = run_random_campaign(b);
  EXPECT_EQ(s.instances, 24);
  EXPECT_EQ(s.edges_checked, t.edges_checked);
  EXPECT_EQ(s.transfers, t.transfers);
  EXPECT_EQ(s.mvi_without_min, t.mvi_without_min);
  EXPECT_EQ(s.inequality_checks, t.inequality_checks);
  EXPECT_EQ(s.violations, 0);
  EXPECT_EQ(s.failures, t.failures);
}

TEST(Harness, RegularityAuditOnBuiltins) {
  for (const auto& name : builtin_names()) {
    const RegularityAudit a = audit_regularity(builtin(name));
    EXPECT_EQ(a.inequality_failures, 0) << name;
    EXPECT_EQ(a.sr_failures, 0) << name;
  }
}
