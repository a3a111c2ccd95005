#include "setopt/harness.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>

#include "setopt/dini.hpp"

namespace setopt {

std::string_view edge_status_name(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Pass: return "PASS";
    case EdgeStatus::PassTransfer: return "PASS-TRANSFER";
    case EdgeStatus::Violation: return "VIOLATION";
    case EdgeStatus::Skipped: return "SKIPPED";
    case EdgeStatus::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

const ConditionVerdict& HarnessReport::verdict(Condition c) const {
  for (const auto& v : verdicts)
    if (v.id == c) return v;
  throw std::out_of_range("condition not evaluated");
}

int HarnessReport::count(EdgeStatus s) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [s](const EdgeResult& e) { return e.status == s; }));
}

const std::vector<Rational>& transfer_grid() {
  static const std::vector<Rational> grid = [] {
    std::vector<Rational> g;
    for (int k = 0; k <= 16; ++k) g.push_back(frac(k, 16));
    Rational p = 1;
    for (int k = 1; k <= 12; ++k) {
      p /= 2;
      g.push_back(p);
      g.push_back(1 - p);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }();
  return grid;
}

namespace {

std::string name_of(Condition c) { return std::string(condition_name(c)); }

int severity(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Pass: return 0;
    case EdgeStatus::Skipped: return 1;
    case EdgeStatus::PassTransfer: return 2;
    case EdgeStatus::Unresolved: return 3;
    case EdgeStatus::Violation: return 4;
  }
  return 0;
}

class Harness {
 public:
  Harness(const MapPtr& f, const Vec& x0, const TestSet& t, const WitnessSearch& w, const HarnessOptions& opts)
      : ctx_(f, x0, w), t_(t), opts_(opts) {}

  HarnessReport run();

 private:
  const ConditionVerdict& v(Condition c) const { return verdicts_.at(static_cast<std::size_t>(c)); }
  Vec seg(const Vec& x, const Rational& t) const { return add(ctx_.x0(), scaled(t, sub(x, ctx_.x0()))); }

  bool clause_fails(Condition c, const Vec& x) {
    const ClauseResult r = ctx_.clause(c, x);
    return !r.holds && !r.excluded;
  }

  EdgeResult implication(Condition p, Condition q, const std::string& group);
  void add_implication(Condition p, Condition q, const std::string& group, EdgeStatus on_violation);
  void add_equivalence_chain(const std::vector<Condition>& chain, const std::string& group, EdgeStatus on_violation,
                             const std::string& note = {});
  void add_skipped(const std::vector<Condition>& chain, const std::string& group, const std::string& why);
  void pointwise(Condition a, Condition b, const std::string& hypothesis, bool at_x0_side,
                 bool (Harness::*premise)(const Vec&, bool));
  bool sr_at(const Vec& x, bool at_x0_side);
  bool wr_at(const Vec& x, bool at_x0_side);
  void constancy(Condition premise);
  bool probe_passes(ProbeVariant p) const;

  CertificationContext ctx_;
  TestSet t_;
  HarnessOptions opts_;
  std::vector<ConditionVerdict> verdicts_;
  std::vector<EdgeResult> edges_;
  std::vector<ProbeReport> probes_;
};

EdgeResult Harness::implication(Condition p, Condition q, const std::string& group) {
  EdgeResult e;
  e.label = name_of(p) + " => " + name_of(q);
  e.group = group;
  if (!v(p).holds) {
    e.detail = "premise fails on T";
    return e;
  }
  if (v(q).holds) return e;
  for (const auto& pv : v(q).points) {
    if (pv.clause.holds || pv.clause.excluded) continue;
    std::optional<Vec> moved;
    for (const auto& t : transfer_grid()) {
      const Vec y = seg(pv.x, t);
      if (clause_fails(p, y)) {
        moved = y;
        break;
      }
    }
    if (!moved) {
      e.status = EdgeStatus::Violation;
      e.chain = {pv.x};
      e.detail = name_of(q) + " fails at " + to_string(pv.x) + " (" + pv.clause.detail + ") and " + name_of(p) +
                 " holds on the segment grid";
      return e;
    }
    e.status = EdgeStatus::PassTransfer;
    e.chain.push_back(pv.x);
    e.chain.push_back(*moved);
  }
  e.detail = "every failure of " + name_of(q) + " transfers to a failure of " + name_of(p);
  return e;
}

void Harness::add_implication(Condition p, Condition q, const std::string& group, EdgeStatus on_violation) {
  EdgeResult e = implication(p, q, group);
  if (e.status == EdgeStatus::Violation) {
    // A scalarized failure found by an incomplete search is not certified.
    if (!ctx_.search().complete() && is_scalarized(q))
      e.status = EdgeStatus::Unresolved, e.detail += "; witness search incomplete";
    else
      e.status = on_violation;
  }
  edges_.push_back(std::move(e));
}

void Harness::add_equivalence_chain(const std::vector<Condition>& chain, const std::string& group,
                                    EdgeStatus on_violation, const std::string& note) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    add_implication(chain[i], chain[i + 1], group, on_violation);
    add_implication(chain[i + 1], chain[i], group, on_violation);
    if (!note.empty()) {
      edges_[edges_.size() - 1].detail += "; " + note;
      edges_[edges_.size() - 2].detail += "; " + note;
    }
  }
}

void Harness::add_skipped(const std::vector<Condition>& chain, const std::string& group, const std::string& why) {
  std::string label;
  for (std::size_t i = 0; i < chain.size(); ++i) label += (i ? " <=> " : "") + name_of(chain[i]);
  edges_.push_back(EdgeResult{label, group, EdgeStatus::Skipped, why, {}});
}

bool Harness::sr_at(const Vec& x, bool at_x0_side) {
  const Vec& x0 = ctx_.x0();
  return at_x0_side ? check_SR(ctx_.map(), x0, sub(x, x0)).pass : check_SR(ctx_.map(), x, sub(x0, x)).pass;
}

bool Harness::wr_at(const Vec& x, bool at_x0_side) {
  const Vec& x0 = ctx_.x0();
  return at_x0_side ? check_WR(ctx_.map(), x0, sub(x, x0)).pass : check_WR(ctx_.map(), x, sub(x0, x)).pass;
}

void Harness::pointwise(Condition a, Condition b, const std::string& hypothesis, bool at_x0_side,
                        bool (Harness::*premise)(const Vec&, bool)) {
  EdgeResult e;
  e.label = name_of(a) + " <=> " + name_of(b) + " where " + hypothesis;
  e.group = "regularity";
  if (!ctx_.search().complete()) {
    e.status = EdgeStatus::Skipped;
    e.detail = "needs a complete witness search";
    edges_.push_back(std::move(e));
    return;
  }
  int used = 0;
  for (const auto& x : t_.points) {
    if (!(this->*premise)(x, at_x0_side)) continue;
    ++used;
    const ClauseResult ra = ctx_.clause(a, x);
    const ClauseResult rb = ctx_.clause(b, x);
    const bool ha = ra.holds || ra.excluded;
    const bool hb = rb.holds || rb.excluded;
    if (ha != hb) {
      e.status = EdgeStatus::Violation;
      e.chain = {x};
      e.detail = name_of(a) + (ha ? " holds" : " fails") + " but " + name_of(b) + (hb ? " holds" : " fails") +
                 " at " + to_string(x);
      edges_.push_back(std::move(e));
      return;
    }
  }
  if (used == 0) e.status = EdgeStatus::Skipped;
  e.detail = std::to_string(used) + " points satisfy " + hypothesis;
  edges_.push_back(std::move(e));
}

void Harness::constancy(Condition premise) {
  EdgeResult e;
  e.label = name_of(premise) + " => constant restriction";
  e.group = "constancy";
  if (!v(premise).holds) {
    e.detail = "premise fails on T";
    edges_.push_back(std::move(e));
    return;
  }
  const Vec& x0 = ctx_.x0();
  const UpperSet f0 = ctx_.value(x0);
  static const std::vector<Rational> ts{frac(0, 1), frac(1, 4), frac(1, 2), frac(3, 4), frac(1, 1)};
  int checked = 0;
  for (const auto& x : t_.points) {
    if (x == x0 || !ctx_.same_as_x0(x)) continue;
    ++checked;
    for (const auto& t : ts) {
      const Vec xt = seg(x, t);
      if (set_equal(ctx_.value(xt), f0)) continue;
      if (clause_fails(premise, xt)) {
        e.status = std::max(e.status, EdgeStatus::PassTransfer,
                            [](EdgeStatus a, EdgeStatus b) { return severity(a) < severity(b); });
        e.chain.push_back(x);
        e.chain.push_back(xt);
        continue;
      }
      e.status = EdgeStatus::Violation;
      e.chain = {x, xt};
      e.detail = "f(x) = f(x0) at " + to_string(x) + " but f differs at " + to_string(xt) + " where " +
                 name_of(premise) + " holds";
      edges_.push_back(std::move(e));
      return;
    }
  }
  e.detail = std::to_string(checked) + " points with f(x) = f(x0)";
  edges_.push_back(std::move(e));
}

bool Harness::probe_passes(ProbeVariant p) const {
  for (const auto& r : probes_)
    if (r.variant == p) return r.outcome == ProbeOutcome::Pass;
  return false;
}

HarnessReport Harness::run() {
  using C = Condition;
  const HFamilyMap& f = ctx_.map();
  for (C c : kTwelveConditions) verdicts_.push_back(ctx_.certify(c, t_));
  verdicts_.push_back(ctx_.certify(C::SR, t_));
  verdicts_.push_back(ctx_.certify(C::WR, t_));

  if (opts_.run_probes) {
    for (ProbeVariant p : {ProbeVariant::BStarLsc, ProbeVariant::UpperHausdorff, ProbeVariant::LatticeLsc})
      probes_.push_back(continuity_probe(f, ctx_.x0(), p, opts_.probe));
    if (f.vector_source() && f.vector_source()->domain.contains(ctx_.x0()))
      probes_.push_back(c_continuity_probe(*f.vector_source(), ctx_.x0(), opts_.probe));
  }

  const std::string U = "unconditional";
  for (auto [p, q] : std::vector<std::pair<C, C>>{{C::svi_M, C::SVI_M},
                                                  {C::SVI_M, C::Min},
                                                  {C::Min, C::mvi_M},
                                                  {C::MVI_M, C::mvi_M},
                                                  {C::svi_W, C::WscMin},
                                                  {C::WscMin, C::mvi_W},
                                                  {C::MVI_M, C::mvi_W},
                                                  {C::svi_W, C::SVI_W},
                                                  {C::SVI_W, C::WMin},
                                                  {C::WMin, C::SVI_W},
                                                  {C::WlMin, C::WscMin},
                                                  {C::WscMin, C::WMin},
                                                  {C::Min, C::WlMin}})
    add_implication(p, q, U, EdgeStatus::Violation);
  for (auto [p, q] : std::vector<std::pair<C, C>>{
           {C::SVI_M, C::SVI_W}, {C::svi_M, C::svi_W}, {C::mvi_M, C::mvi_W}, {C::MVI_M, C::MVI_W}})
    add_implication(p, q, "strong-to-weak", EdgeStatus::Violation);
  constancy(C::SVI_M);
  constancy(C::svi_M);

  pointwise(C::svi_M, C::SVI_M, "WR at (x0, x - x0)", true, &Harness::wr_at);
  pointwise(C::mvi_M, C::MVI_M, "SR at (x, x0 - x)", false, &Harness::sr_at);
  pointwise(C::SVI_W, C::svi_W, "SR at (x0, x - x0)", true, &Harness::sr_at);
  if (v(C::SR).holds)
    add_equivalence_chain({C::svi_W, C::WscMin}, "regularity", EdgeStatus::Violation, "SR holds on T");
  else
    add_skipped({C::svi_W, C::WscMin}, "regularity", "SR fails on T");

  const std::string M = "finite-mstar";
  const std::vector<std::vector<C>> mstar_chains{{C::svi_W, C::WscMin}, {C::svi_W, C::WscMin, C::mvi_W}};
  if (ctx_.search().strategy != WitnessSearch::Strategy::MStar) {
    add_skipped({C::mvi_M, C::Min}, M, "witness search is not a finite M*");
    for (const auto& ch : mstar_chains) add_skipped(ch, M, "witness search is not a finite M*");
  } else if (!probe_passes(ProbeVariant::BStarLsc)) {
    add_skipped({C::mvi_M, C::Min}, M, "B*-lsc probe did not pass");
    for (const auto& ch : mstar_chains) add_skipped(ch, M, "B*-lsc probe did not pass");
  } else {
    add_implication(C::mvi_M, C::Min, M, EdgeStatus::Unresolved);
    for (const auto& ch : mstar_chains) add_equivalence_chain(ch, M, EdgeStatus::Unresolved, "sampled hypothesis");
  }

  const std::string V = "vector";
  if (f.vector_source()) {
    add_equivalence_chain({C::svi_M, C::SVI_M}, V, EdgeStatus::Violation);
    add_equivalence_chain({C::mvi_M, C::MVI_M}, V, EdgeStatus::Violation);
    if (probe_passes(ProbeVariant::CContinuity))
      add_implication(C::mvi_M, C::Min, V, EdgeStatus::Unresolved);
    else
      add_skipped({C::mvi_M, C::Min}, V, "C-continuity probe did not pass");
    add_equivalence_chain({C::SVI_W, C::svi_W, C::WMin, C::WscMin}, V, EdgeStatus::Violation);
  } else {
    add_skipped({C::svi_M, C::SVI_M}, V, "map is not a vector extension");
  }

  const std::string K = "compact";
  const UpperSet c_set = UpperSet::cone_set(f.cone());
  if (set_equal(ctx_.recession(ctx_.x0()), c_set)) {
    add_equivalence_chain({C::SVI_W, C::svi_W, C::WscMin, C::WMin, C::WlMin}, K, EdgeStatus::Violation);
    if (probe_passes(ProbeVariant::UpperHausdorff))
      add_equivalence_chain({C::WlMin, C::mvi_W}, K, EdgeStatus::Unresolved, "sampled hypothesis");
    else
      add_skipped({C::WlMin, C::mvi_W}, K, "upper-Hausdorff probe did not pass");
  } else {
    add_skipped({C::SVI_W, C::svi_W, C::WscMin, C::WMin, C::WlMin}, K, "0+f(x0) differs from C");
  }

  HarnessReport rep;
  rep.instance = f.name();
  rep.x0 = ctx_.x0();
  rep.search = ctx_.search().describe();
  rep.verdicts = std::move(verdicts_);
  rep.edges = std::move(edges_);
  rep.probes = std::move(probes_);
  rep.mvi_without_min = rep.verdict(C::mvi_M).holds && !rep.verdict(C::Min).holds;
  return rep;
}

}  // namespace

HarnessReport run_implication_harness(const MapPtr& f, const Vec& x0, const TestSet& t, const WitnessSearch& w,
                                      const HarnessOptions& opts) {
  return Harness(f, x0, t, w, opts).run();
}

HarnessReport run_implication_harness(const Instance& inst, const HarnessOptions& opts) {
  HarnessReport rep = run_implication_harness(inst.map, inst.x0, inst.testset, inst.search, opts);
  rep.instance = inst.name;
  for (const auto& ex : inst.expected) {
    const ConditionVerdict& got = rep.verdict(ex.condition);
    EdgeResult e;
    e.label = "expected " + name_of(ex.condition) + (ex.holds ? " HOLDS" : " FAILS");
    e.group = "expected";
    if (got.holds != ex.holds) {
      e.status = EdgeStatus::Violation;
      e.detail = "computed the opposite verdict (" + ex.basis + ")";
      if (got.witness_x) e.chain = {*got.witness_x};
    }
    rep.edges.push_back(std::move(e));
  }
  return rep;
}

RegularityAudit audit_regularity(const Instance& inst) {
  RegularityAudit a;
  const HFamilyMap& f = *inst.map;
  const bool psi = static_cast<bool>(f.vector_source());
  auto tally = [&](const SrVerdict& sr) {
    ++a.inequality_checks;
    if (!sr.inequality_holds) ++a.inequality_failures;
    if (psi) {
      ++a.sr_checks;
      if (!sr.pass) ++a.sr_failures;
    }
  };
  for (const auto& x : inst.testset.points) {
    if (x == inst.x0) continue;
    tally(check_SR(f, inst.x0, sub(x, inst.x0)));
    if (f.in_domain(x)) tally(check_SR(f, x, sub(inst.x0, x)));
  }
  return a;
}

namespace {

struct CampaignItem {
  int edges = 0, violations = 0, transfers = 0, unresolved = 0, skipped = 0, constancy = 0;
  bool mvi_without_min = false, psi = false;
  RegularityAudit audit;
  std::vector<std::string> failures;
};

std::vector<std::string> violated_labels(const HarnessReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.edges)
    if (e.status == EdgeStatus::Violation) out.push_back(e.label);
  return out;
}

// Greedy one-point-at-a-time removal that keeps the labelled edge violated.
TestSet shrink(const Instance& inst, const std::string& label, const HarnessOptions& opts) {
  TestSet t = inst.testset;
  bool changed = true;
  while (changed && t.points.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      TestSet smaller = t;
      smaller.points.erase(smaller.points.begin() + static_cast<long>(i));
      const auto rep = run_implication_harness(inst.map, inst.x0, smaller, inst.search, opts);
      const auto labels = violated_labels(rep);
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
        t = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return t;
}

CampaignItem run_one(std::uint64_t seed, const CampaignOptions& opts) {
  CampaignItem item;
  const Instance inst = generate_random(seed, opts.spec);
  HarnessOptions hopts;
  hopts.run_probes = opts.run_probes;
  const HarnessReport rep = run_implication_harness(inst, hopts);
  item.psi = static_cast<bool>(inst.map->vector_source());
  item.mvi_without_min = rep.mvi_without_min;
  for (const auto& e : rep.edges) {
    if (e.group == "constancy") ++item.constancy;
    if (e.status == EdgeStatus::Skipped) {
      ++item.skipped;
      continue;
    }
    ++item.edges;
    if (e.status == EdgeStatus::PassTransfer) ++item.transfers;
    if (e.status == EdgeStatus::Unresolved) ++item.unresolved;
    if (e.status == EdgeStatus::Violation) {
      ++item.violations;
      std::ostringstream line;
      line << inst.name << " seed=" << seed << " edge=\"" << e.label << "\" " << e.detail;
      if (e.group != "expected") {
        line << " shrunk T=";
        for (const auto& x : shrink(inst, e.label, hopts).points) line << to_string(x) << ' ';
      }
      item.failures.push_back(line.str());
    }
  }
  item.audit = audit_regularity(inst);
  return item;
}

}  // namespace

CampaignSummary run_random_campaign(const CampaignOptions& opts) {
  const int n = std::max(0, opts.count);
  std::vector<CampaignItem> items(static_cast<std::size_t>(n));
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, n));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int i = static_cast<int>(w); i < n; i += static_cast<int>(threads))
          items[static_cast<std::size_t>(i)] = run_one(opts.seed + static_cast<std::uint64_t>(i), opts);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  CampaignSummary s;
  for (const auto& it : items) {
    ++s.instances;
    s.edges_checked += it.edges;
    s.violations += it.violations;
    s.transfers += it.transfers;
    s.unresolved += it.unresolved;
    s.skipped += it.skipped;
    s.constancy_checks += it.constancy;
    s.mvi_without_min += it.mvi_without_min ? 1 : 0;
    s.psi_instances += it.psi ? 1 : 0;
    s.sr_checks_on_psi += it.audit.sr_checks;
    s.sr_failures_on_psi += it.audit.sr_failures;
    s.inequality_checks += it.audit.inequality_checks;
    s.inequality_failures += it.audit.inequality_failures;
    s.failures.insert(s.failures.end(), it.failures.begin(), it.failures.end());
  }
  return s;
}

}  // namespace setopt
