#include "setopt/probes.hpp"

#include <algorithm>

#include "setopt/lp.hpp"

namespace setopt {

namespace {

std::vector<Vec> default_directions(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zeros(n);
    e[i] = 1;
    out.push_back(e);
    out.push_back(scaled(-1, e));
  }
  if (n > 1) {
    out.push_back(Vec(n, Rational(1)));
    out.push_back(Vec(n, Rational(-1)));
  }
  return out;
}

std::vector<Rational> default_radii() {
  std::vector<Rational> out;
  Rational r = frac(1, 2);
  for (int k = 0; k < 8; ++k, r /= 2) out.push_back(r);
  return out;
}

enum class Trend { Ok, Stuck, Unclear };

// Defects are listed for decreasing radii.
Trend classify(const std::vector<ExtReal>& d, const std::vector<Rational>& radii) {
  const std::size_t n = d.size();
  const std::size_t from = n >= 3 ? n - 3 : 0;
  bool ok = true;
  for (std::size_t k = from; k < n && ok; ++k) {
    if (d[k] <= ExtReal(0)) continue;
    if (!d[k].is_finite() || k == from) {
      ok = k == from && d[k].is_finite() && n - from > 1;
      continue;
    }
    const ExtReal prev = d[k - 1];
    // Shrinks at least linearly with the radius.
    ok = prev.is_finite() && d[k].value() * radii[k - 1] <= prev.value() * radii[k];
  }
  if (ok) return Trend::Ok;
  if (d.back() > ExtReal(0) && d.back() >= d[from]) return Trend::Stuck;
  return Trend::Unclear;
}

ProbeReport run(ProbeVariant variant, const std::vector<Vec>& dirs, const std::vector<Rational>& radii,
                const std::function<ExtReal(const Vec&, const Rational&)>& defect) {
  ProbeReport rep;
  rep.variant = variant;
  bool unclear = false;
  for (const auto& d : dirs) {
    std::vector<ExtReal> seq;
    for (const auto& r : radii) {
      seq.push_back(defect(d, r));
      ++rep.samples;
    }
    const Trend t = classify(seq, radii);
    if (t == Trend::Stuck) {
      rep.outcome = ProbeOutcome::Fail;
      rep.detail = "defect " + seq.back().str() + " does not shrink along " + to_string(d);
      return rep;
    }
    if (t == Trend::Unclear && !unclear) {
      unclear = true;
      rep.detail = "no clear trend along " + to_string(d);
    }
  }
  rep.outcome = unclear ? ProbeOutcome::Inconclusive : ProbeOutcome::Pass;
  return rep;
}

}  // namespace

std::string_view probe_name(ProbeVariant v) {
  switch (v) {
    case ProbeVariant::BStarLsc: return "B*-lsc";
    case ProbeVariant::UpperHausdorff: return "upper-Hausdorff";
    case ProbeVariant::LatticeLsc: return "lattice-lsc";
    case ProbeVariant::CContinuity: return "C-continuity";
  }
  return "?";
}

std::string_view outcome_name(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::Pass: return "PASS";
    case ProbeOutcome::Fail: return "FAIL";
    case ProbeOutcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

ProbeReport continuity_probe(const SetFunction& f, const ConePtr& cone, const Vec& x0, ProbeVariant variant,
                             const ProbeSpec& spec) {
  require(variant != ProbeVariant::CContinuity, "C-continuity is probed on the vector map");
  const auto dirs = spec.directions.empty() ? default_directions(x0.size()) : spec.directions;
  const auto radii = spec.radii.empty() ? default_radii() : spec.radii;
  const auto funcs = spec.functionals.empty() ? cone->base_vertices() : spec.functionals;
  const UpperSet f0 = f(x0);
  auto at = [&](const Vec& d, const Rational& r) { return f(add(x0, scaled(r, d))); };
  switch (variant) {
    case ProbeVariant::BStarLsc:
      return run(variant, dirs, radii, [&](const Vec& d, const Rational& r) {
        const UpperSet fx = at(d, r);
        ExtReal worst = ExtReal::minus_inf();
        for (const auto& v : funcs) {
          // φ(x0) - φ(x) = σ(v|f(x)) -. σ(v|f(x0)) in residuated form
          const ExtReal gap = residual(negate(support(v, f0)), negate(support(v, fx)));
          worst = std::max(worst, gap);
        }
        return worst;
      });
    case ProbeVariant::UpperHausdorff:
      return run(variant, dirs, radii,
                 [&](const Vec& d, const Rational& r) { return negate(ball_margin(at(d, r), f0)); });
    case ProbeVariant::LatticeLsc: {
      // The hull of the sets met within radius r has the pointwise maximum of
      // their support functions, so its excess over f(x0) is the running
      // maximum of the single-point excesses, taken from the inside out.
      std::vector<ExtReal> excess;
      ProbeReport rep;
      rep.variant = variant;
      std::vector<ExtReal> running(radii.size(), ExtReal::minus_inf());
      for (const auto& d : dirs)
        for (std::size_t k = 0; k < radii.size(); ++k) {
          running[k] = std::max(running[k], negate(ball_margin(at(d, radii[k]), f0)));
          ++rep.samples;
        }
      for (std::size_t k = radii.size(); k-- > 1;) running[k - 1] = std::max(running[k - 1], running[k]);
      const Trend t = classify(running, radii);
      rep.outcome = t == Trend::Ok ? ProbeOutcome::Pass : t == Trend::Stuck ? ProbeOutcome::Fail : ProbeOutcome::Inconclusive;
      if (t != Trend::Ok) rep.detail = "hull excess " + running.back().str() + " at the smallest radius";
      return rep;
    }
    case ProbeVariant::CContinuity: break;
  }
  return {};
}

ProbeReport continuity_probe(const HFamilyMap& f, const Vec& x0, ProbeVariant variant, const ProbeSpec& spec) {
  return continuity_probe([&f](const Vec& x) { return f.evaluate(x); }, f.cone(), x0, variant, spec);
}

Rational c_excess(const OrderingCone& cone, const Vec& d) {
  const std::size_t m = cone.dimension();
  require(d.size() == m, "C-excess: dimension mismatch");
  // Variables (w, τ): d - w in C and |w_i| <= τ.
  LinearProgram lp;
  lp.maximize = false;
  lp.objective = zeros(m + 1);
  lp.objective[m] = 1;
  for (const auto& v : cone.dual_rays()) {
    Vec row = zeros(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = -v[i];
    lp.add_row(std::move(row), RowSense::Leq, -dot(v, d));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec row = zeros(m + 1);
    row[i] = 1;
    row[m] = -1;
    lp.add_row(row, RowSense::Leq, 0);
    row[i] = -1;
    lp.add_row(row, RowSense::Leq, 0);
  }
  const LpOutcome out = solve_lp(lp);
  require(out.status == LpStatus::Optimal, "C-excess LP must be solvable");
  return out.value;
}

ProbeReport c_continuity_probe(const VectorMap& psi, const Vec& x0, const ProbeSpec& spec) {
  require(psi.domain.contains(x0), "C-continuity probe needs x0 in S");
  const auto dirs = spec.directions.empty() ? default_directions(x0.size()) : spec.directions;
  const auto radii = spec.radii.empty() ? default_radii() : spec.radii;
  const Vec p0 = psi.value(x0);
  return run(ProbeVariant::CContinuity, dirs, radii, [&](const Vec& d, const Rational& r) {
    const Vec x = add(x0, scaled(r, d));
    if (!psi.domain.contains(x)) return ExtReal::minus_inf();
    return ExtReal(c_excess(*psi.cone, sub(psi.value(x), p0)));
  });
}

}  // namespace setopt
