#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setopt/certify.hpp"
#include "setopt/instances.hpp"
#include "setopt/probes.hpp"

namespace setopt {

enum class EdgeStatus { Pass, PassTransfer, Violation, Skipped, Unresolved };
std::string_view edge_status_name(EdgeStatus s);

struct EdgeResult {
  std::string label;  // e.g. "svi_M => SVI_M"
  std::string group;  // unconditional, strong-to-weak, regularity, finite-mstar, vector, compact
  EdgeStatus status = EdgeStatus::Pass;
  std::string detail;
  /// Witness chain: the failing point of the conclusion, then the segment
  /// point where the premise fails (for transfers).
  std::vector<Vec> chain;
};

struct HarnessOptions {
  bool run_probes = true;
  ProbeSpec probe;
};

struct HarnessReport {
  std::string instance;
  Vec x0;
  std::string search;
  std::vector<ConditionVerdict> verdicts;  // twelve conditions, then SR and WR
  std::vector<EdgeResult> edges;
  std::vector<ProbeReport> probes;
  /// mvi_M holds while Min fails on the test set.
  bool mvi_without_min = false;

  const ConditionVerdict& verdict(Condition c) const;
  int count(EdgeStatus s) const;
};

HarnessReport run_implication_harness(const MapPtr& f, const Vec& x0, const TestSet& t, const WitnessSearch& w,
                                      const HarnessOptions& opts = {});
HarnessReport run_implication_harness(const Instance& inst, const HarnessOptions& opts = {});

/// Segment parameters used to transfer a failure: k/16, 2^-k and 1 - 2^-k.
const std::vector<Rational>& transfer_grid();

struct CampaignOptions {
  std::uint64_t seed = 7;
  int count = 1000;
  RandomSpec spec;
  unsigned threads = 0;  // 0: hardware concurrency
  bool run_probes = false;
};

struct CampaignSummary {
  int instances = 0;
  int edges_checked = 0;
  int violations = 0;
  int transfers = 0;
  int unresolved = 0;
  int skipped = 0;
  int mvi_without_min = 0;
  int psi_instances = 0;
  int sr_checks_on_psi = 0;
  int sr_failures_on_psi = 0;
  int inequality_checks = 0;
  int inequality_failures = 0;
  int constancy_checks = 0;
  /// One line per violation, with the shrunken test set.
  std::vector<std::string> failures;
};

/// Regularity audit for one instance: SR on ψ^C maps and φ' <= -σ(z*|f')
/// on every map, at (x0, x - x0) and (x, x0 - x) for x in the test set.
struct RegularityAudit {
  int sr_checks = 0;
  int sr_failures = 0;
  int inequality_checks = 0;
  int inequality_failures = 0;
};
RegularityAudit audit_regularity(const Instance& inst);

CampaignSummary run_random_campaign(const CampaignOptions& opts);

}  // namespace setopt
