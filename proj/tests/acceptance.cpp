// Acceptance criteria: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "setopt/harness.hpp"

using namespace setopt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
    ++count_;
  }
  Outcome finish(const std::string& summary) {
    if (out_.pass) out_.detail = summary + " (" + std::to_string(count_) + " checks)";
    return out_;
  }

 private:
  Outcome out_;
  int count_ = 0;
};

std::string str(const Vec& v) { return to_string(v); }

bool contains(const std::vector<Vec>& pts, const Vec& x) { return std::find(pts.begin(), pts.end(), x) != pts.end(); }

// ---------------------------------------------------------------------------
Outcome minty_gap() {
  Check c;
  const Instance inst = builtin("r2-minty-gap");
  const HFamilyMap& f = *inst.map;
  const Vec z{-1, -1};
  const Scalarization phi = scalarize(inst.map, z);
  // f(0) = { z1 + z2 >= 1, z >= 0 }: the least z1 + z2 is 1.
  c.expect(phi.value({0}) == ExtReal(1), "phi(0) != 1");
  // phi(t) = 1 - t/2 for t <= 2/5, so every quotient there is -1/2.
  for (const Rational& t : {frac(1, 10), frac(1, 5), frac(2, 5)})
    c.expect(residual(phi.value({t}), phi.value({0})) == ExtReal(-t / 2), "phi is not 1 - t/2 near 0");
  c.expect(scalar_dini(phi, {0}, {1}) == ExtReal(frac(-1, 2)), "phi'(0,1) != -1/2");
  const UpperSet d = set_dini(f, {0}, {1}).value;
  const UpperSet want = UpperSet::translate(f.cone(), {1, 1});
  c.expect(order_leq(d, want) && order_leq(want, d), "f'(0,1) != (1,1) + C");
  CertificationContext ctx(inst.map, inst.x0);
  const ConditionVerdict mvi = ctx.certify(Condition::mvi_M, inst.testset);
  c.expect(mvi.holds, "mvi_M fails");
  const ClauseResult at0 = ctx.clause(Condition::mvi_M, {0});
  c.expect(at0.holds && at0.zstar && *at0.zstar == z, "mvi_M witness at x = 0 is not (-1,-1)");
  const ConditionVerdict strong = ctx.certify(Condition::MVI_M, inst.testset);
  c.expect(!strong.holds && strong.witness_x && *strong.witness_x == Vec{0}, "MVI_M does not fail at x = 0");
  c.expect(!check_SR(f, {0}, {1}).pass, "SR passes at (0,1)");
  return c.finish("phi(0)=1, phi'(0,1)=-1/2, f'(0,1)=(1,1)+C, mvi_M holds via (-1,-1), MVI_M fails at 0, SR fails");
}

// ---------------------------------------------------------------------------
Outcome pareto() {
  Check c;
  const Instance inst = builtin("pareto-identity");
  const TestSet grid = pareto_grid();
  c.expect(grid.points.size() == 25, "grid does not have 25 points");
  CertificationContext ctx(inst.map, {0, 2});
  for (Condition k : {Condition::WlMin, Condition::WscMin, Condition::WMin, Condition::SVI_W, Condition::svi_W,
                      Condition::MVI_W, Condition::mvi_W})
    c.expect(ctx.certify(k, grid).holds, std::string(condition_name(k)) + " fails");
  for (Condition k : {Condition::Min, Condition::SVI_M, Condition::svi_M, Condition::MVI_M, Condition::mvi_M})
    c.expect(!ctx.certify(k, grid).holds, std::string(condition_name(k)) + " holds");
  // Componentwise dominance written out for ψ(x) = x.
  for (const auto& x0 : grid.points) {
    bool dominated = false;
    for (const auto& y : grid.points)
      dominated = dominated || (y != x0 && y[0] <= x0[0] && y[1] <= x0[1]);
    const ParetoSets ps = brute_force_pareto(*inst.map->vector_source(), grid);
    c.expect(contains(ps.efficient, x0) == !dominated, "brute force disagrees with dominance at " + str(x0));
    c.expect(certify_min(inst.map, x0, grid).holds == !dominated, "certify_min disagrees at " + str(x0));
  }
  return c.finish("7 weak conditions hold, 5 strong fail, Min matches Pareto dominance on 25 points");
}

// ---------------------------------------------------------------------------
Outcome linf() {
  Check c;
  const int N = 5;
  const Instance inst = builtin("linf-truncated");
  const HFamilyMap& f = *inst.map;
  const ConditionVerdict min = certify_min(inst.map, inst.x0, inst.testset);
  c.expect(!min.holds && min.witness_x && *min.witness_x == Vec{0}, "Min does not fail with witness 0");
  Rational top = 0;
  for (int n = 1; n <= N; ++n) {
    // α_n = floor(10^6 sqrt(n^2 - 1)) / 10^6, checked by integer bracketing.
    const Rational a = linf_alpha(n);
    const Rational scaled_a = a * 1000000;
    const mpz_class k = scaled_a.get_num();
    const mpz_class r = mpz_class(n * n - 1) * mpz_class("1000000000000");
    c.expect(scaled_a.get_den() == 1 && k * k <= r && (k + 1) * (k + 1) > r,
             "alpha_" + std::to_string(n) + " is not the truncated root");
    const Rational th = a / n;
    top = std::max(top, th);
    Vec v = zeros(N);
    v[n - 1] = -1;
    const Rational eps = frac(1, 1000000000);
    c.expect(scalar_dini(f, v, {th - eps}, {1}) < ExtReal(0), "slope not negative below threshold " + std::to_string(n));
    c.expect(scalar_dini(f, v, {th}, {1}) > ExtReal(0), "slope not positive at threshold " + std::to_string(n));
    c.expect(scalar_dini(f, v, {th + eps}, {1}) > ExtReal(0), "slope not positive above threshold " + std::to_string(n));
  }
  CertificationContext ctx(inst.map, inst.x0);
  int above = 0;
  for (const auto& x : inst.testset.points) {
    if (x[0] <= top || x == inst.x0) continue;
    ++above;
    c.expect(!ctx.clause(Condition::mvi_M, x).holds, "mvi_M holds at " + str(x));
  }
  c.expect(above > 0, "no test point above the largest threshold");
  c.expect(!ctx.certify(Condition::mvi_M, inst.testset).holds, "mvi_M verdict holds");
  // With M* = vertices of B*, the finite-M* edges see Min and mvi_M fail together.
  Instance ms = inst;
  ms.search.strategy = WitnessSearch::Strategy::MStar;
  ms.search.mstar = f.cone()->base_vertices();
  const HarnessReport rep = run_implication_harness(ms);
  c.expect(rep.count(EdgeStatus::Violation) == 0 && rep.count(EdgeStatus::Unresolved) == 0,
           "finite-M* harness run reports a violation");
  return c.finish("5 thresholds bracket the sign flip exactly; mvi_M fails above " + to_string(top));
}

// ---------------------------------------------------------------------------
CampaignSummary g_campaign;

Outcome campaign() {
  Check c;
  CampaignOptions opts;
  opts.seed = 7;
  opts.count = 1000;
  g_campaign = run_random_campaign(opts);
  const CampaignSummary& s = g_campaign;
  c.expect(s.instances == 1000, "campaign size");
  c.expect(s.violations == 0, s.failures.empty() ? "violations" : s.failures.front());
  c.expect(s.unresolved == 0, "unresolved edges");
  c.expect(s.constancy_checks > 0, "no constancy checks");
  std::ostringstream os;
  os << s.edges_checked << " edges, " << s.transfers << " transfers, " << s.constancy_checks
     << " constancy checks, " << s.mvi_without_min << " mvi_M-without-Min instances, 0 violations";
  return c.finish(os.str());
}

// ---------------------------------------------------------------------------
// m = 1: f(x) = [g(x), +inf) with g = max over rows j and pieces i of piece_i / a_j.

ExtReal decode(const UpperSet& a) {
  if (a.is_empty()) return ExtReal::plus_inf();
  if (a.rows().empty()) return ExtReal::minus_inf();
  std::optional<Rational> lo;
  for (const auto& h : a.rows()) {
    const Rational b = h.offset / h.normal[0];
    if (!lo || b > *lo) lo = b;
  }
  return ExtReal(*lo);
}

struct Oracle {
  const HFamilyMap& f;
  std::vector<AffinePiece> terms;  // piece / a_j

  explicit Oracle(const HFamilyMap& map) : f(map) {
    for (const auto& r : f.rows())
      for (const auto& p : r.offset.pieces()) terms.push_back({scaled(1 / r.normal[0], p.g), p.h / r.normal[0]});
  }
  ExtReal g(const Vec& x) const {
    if (!f.domain().contains(x)) return ExtReal::plus_inf();
    Rational best = terms.front().value(x);
    for (const auto& t : terms) best = std::max(best, t.value(x));
    return ExtReal(best);
  }
  ExtReal dg(const Vec& x, const Vec& u) const {
    if (!f.domain().contains(x)) return ExtReal::minus_inf();
    if (f.domain().step_limit(x, u) == ExtReal(0) && !is_zero(u)) return ExtReal::plus_inf();
    const Rational gx = g(x).value();
    std::optional<Rational> best;
    for (const auto& t : terms)
      if (t.value(x) == gx && (!best || dot(t.g, u) > *best)) best = dot(t.g, u);
    return ExtReal(*best);
  }
};

// Clause of each condition at x in extended reals; nullopt when excluded.
std::optional<bool> oracle_clause(const Oracle& o, Condition c, const Vec& x0, const Vec& x) {
  const ExtReal G0 = o.g(x0), Gx = o.g(x);
  const bool in = o.f.domain().contains(x);
  const ExtReal s = o.dg(x0, sub(x, x0));
  const ExtReal m = o.dg(x, sub(x0, x));
  switch (c) {
    case Condition::Min:
    case Condition::WlMin:
    case Condition::WscMin:
    case Condition::WMin: return !(Gx < G0);
    case Condition::SVI_M:
    case Condition::svi_M:
      if (!in || Gx == G0) return std::nullopt;
      return s > ExtReal(0);
    case Condition::SVI_W:
    case Condition::svi_W: return s >= ExtReal(0);
    case Condition::MVI_M:
    case Condition::mvi_M:
      if (Gx == G0) return std::nullopt;
      return m < ExtReal(0);
    case Condition::MVI_W:
    case Condition::mvi_W: return m <= ExtReal(0);
    case Condition::SR:
    case Condition::WR: return true;
  }
  return true;
}

Outcome oracle_m1() {
  Check c;
  RandomSpec spec;
  spec.m = 1;
  int ops = 0, ders = 0, verdicts = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst = generate_random(100000 + seed, spec);
    const HFamilyMap& f = *inst.map;
    const Oracle o(f);
    const ConePtr& C = f.cone();
    const std::string tag = " (seed " + std::to_string(100000 + seed) + ")";
    const auto& T = inst.testset.points;
    for (const auto& x : T) c.expect(decode(f.evaluate(x)) == o.g(x), "evaluation" + tag);
    for (std::size_t i = 0; i + 1 < T.size(); ++i) {
      const UpperSet A = f.evaluate(T[i]), B = f.evaluate(T[i + 1]);
      const ExtReal a = o.g(T[i]), b = o.g(T[i + 1]);
      c.expect(decode(lattice_inf({A, B}, C)) == std::min(a, b), "lattice inf" + tag);
      c.expect(decode(lattice_sup({A, B}, C)) == std::max(a, b), "lattice sup" + tag);
      c.expect(decode(oplus(A, B)) == inf_add(a, b), "oplus" + tag);
      c.expect(decode(inf_residual(A, B)) == residual(a, b), "residual" + tag);
      c.expect(order_leq(A, B) == (a <= b), "order" + tag);
      for (const Rational& t : {Rational(0), frac(1, 3), Rational(2)})
        c.expect(decode(scale(t, A)) == scale(t, a), "scale" + tag);
      ops += 10;
    }
    const Vec v = C->base_vertices().front();
    const Rational e = C->interior_point()[0];
    Vec e1 = zeros(f.xdim());
    e1[0] = 1;
    for (const auto& x : T) {
      for (const Vec& u : {sub(inst.x0, x), sub(x, inst.x0), e1, scaled(-1, e1)}) {
        const ExtReal want = o.dg(x, u);
        c.expect(decode(set_dini(f, x, u).value) == want, "set derivative at " + str(x) + tag);
        c.expect(scalar_dini(f, v, x, u) == divide(want, e), "scalar derivative at " + str(x) + tag);
        ders += 2;
      }
    }
    CertificationContext ctx(inst.map, inst.x0, inst.search);
    for (Condition k : kTwelveConditions) {
      bool want = true;
      for (const auto& x : T) {
        const auto cl = oracle_clause(o, k, inst.x0, x);
        if (cl && !*cl) want = false;
      }
      c.expect(ctx.certify(k, inst.testset).holds == want, std::string(condition_name(k)) + " verdict" + tag);
      ++verdicts;
    }
    c.expect(ctx.certify(Condition::SR, inst.testset).holds, "SR fails at m = 1" + tag);
    const RegularityAudit a = audit_regularity(inst);
    g_campaign.inequality_checks += a.inequality_checks;
    g_campaign.inequality_failures += a.inequality_failures;
  }
  return c.finish("500 instances: " + std::to_string(ops) + " lattice ops, " + std::to_string(ders) +
                  " derivatives, " + std::to_string(verdicts) + " verdicts match");
}

// ---------------------------------------------------------------------------
bool same(const UpperSet& a, const UpperSet& b) { return order_leq(a, b) && order_leq(b, a); }

Outcome laws() {
  Check c;
  int n_adj = 0, n_neutral = 0, n_empty = 0, n_zero = 0, n_dist = 0, n_recon = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = generate_random(500000 + seed);
    const HFamilyMap& f = *inst.map;
    const ConePtr& C = f.cone();
    std::vector<UpperSet> sets;
    for (const auto& x : inst.testset.points)
      if (f.in_domain(x)) sets.push_back(f.evaluate(x));
    if (sets.size() < 3) sets.push_back(UpperSet::translate(C, zeros(C->dimension())));
    while (sets.size() < 3) sets.push_back(UpperSet::cone_set(C));
    const std::string tag = " (seed " + std::to_string(500000 + seed) + ")";
    const UpperSet &A = sets[0], &B = sets[1], &M = sets[2];
    const UpperSet empty = UpperSet::empty(C), cone = UpperSet::cone_set(C);
    c.expect(order_leq(A, oplus(B, M)) == order_leq(inf_residual(A, B), M), "adjunction" + tag);
    c.expect(order_leq(A, oplus(B, inf_residual(A, B))), "residual is feasible" + tag);
    ++n_adj;
    c.expect(same(oplus(A, cone), A), "C is not neutral" + tag);
    ++n_neutral;
    c.expect(oplus(A, empty).is_empty() && order_leq(A, empty), "empty does not dominate" + tag);
    ++n_empty;
    c.expect(same(scale(0, A), cone) && same(scale(0, empty), cone), "0 * A != C" + tag);
    ++n_zero;
    c.expect(same(oplus(B, lattice_inf({A, M}, C)), lattice_inf({oplus(B, A), oplus(B, M)}, C)), "distribution" + tag);
    ++n_dist;
    for (const auto& s : sets) c.expect(same(scalar_reconstruction(s, regularity_functionals(f)), s), "reconstruction" + tag);
    ++n_recon;
  }
  const int least = std::min({n_adj, n_neutral, n_empty, n_zero, n_dist, n_recon});
  c.expect(least >= 200, "fewer than 200 instances per law");
  return c.finish(std::to_string(least) + " instances per law");
}

// ---------------------------------------------------------------------------
Outcome regularity() {
  Check c;
  const CampaignSummary& s = g_campaign;
  c.expect(s.psi_instances > 0 && s.sr_checks_on_psi > 0, "no vector-extension instances in the campaign");
  c.expect(s.sr_failures_on_psi == 0, "SR fails on a vector-extension instance");
  c.expect(s.inequality_checks > 0, "no inequality checks");
  c.expect(s.inequality_failures == 0, "phi' <= -sigma violated");
  std::ostringstream os;
  os << s.sr_checks_on_psi << " SR checks on " << s.psi_instances << " vector-extension instances, "
     << s.inequality_checks << " inequality checks";
  return c.finish(os.str());
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number; the default runs all.
  const std::vector<std::string> only(argv + 1, argv + argc);
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{
      {"1", "R2 Minty gap", minty_gap, 1},
      {"2", "Pareto identity", pareto, 2},
      {"3", "truncated l-infinity", linf, 2},
      {"4", "implication campaign", campaign, 300},
      {"5", "m = 1 oracle", oracle_m1, 60},
      {"6", "structural laws", laws, 60},
      {"7", "regularity", regularity, 1},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > cr.limit_s) {
      if (o.pass) o.detail += "; exceeded time limit";
      o.pass = false;
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", s, cr.limit_s);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << cr.id << "  " << cr.title << "  [" << timing
              << "]  " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
