#include "setopt/dini.hpp"

#include <algorithm>

#include "setopt/lp.hpp"

namespace setopt {

namespace {

bool direction_enters(const HFamilyMap& f, const Vec& x, const Vec& u) {
  return f.domain().step_limit(x, u) > ExtReal(0);
}

}  // namespace

ExtReal scalar_dini_at(const HFamilyMap& f, const UpperSet& fx, const Vec& zstar, const Vec& x, const Vec& u) {
  require(u.size() == f.xdim(), "derivative direction: dimension mismatch");
  if (!f.in_domain(x)) return ExtReal::minus_inf();
  const bool enters = direction_enters(f, x, u);
  const ExtReal sigma = support(zstar, fx);
  if (sigma.is_plus_inf()) return enters ? ExtReal::minus_inf() : ExtReal::plus_inf();
  if (!enters) return ExtReal::plus_inf();

  // σ(z*|f(x+tu)) = min{ Σ λ_j b_j(x+tu) | λ >= 0, Σ λ_j a_j = z* }; its right
  // derivative is the least Σ λ_j s_j over the optimal face at t = 0.
  const auto& rows = f.rows();
  const std::size_t k = rows.size();
  LinearProgram lp;
  lp.maximize = false;
  lp.objective.resize(k);
  Vec offsets(k);
  for (std::size_t j = 0; j < k; ++j) {
    lp.objective[j] = rows[j].offset.right_slope(x, u);
    offsets[j] = rows[j].offset.value(x);
  }
  for (std::size_t i = 0; i < f.zdim(); ++i) {
    Vec r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = rows[j].normal[i];
    lp.add_row(std::move(r), RowSense::Eq, zstar[i]);
  }
  lp.add_row(offsets, RowSense::Eq, sigma.value());
  for (std::size_t j = 0; j < k; ++j) {
    Vec r = zeros(k);
    r[j] = 1;
    lp.add_row(std::move(r), RowSense::Geq, 0);
  }
  const LpOutcome out = solve_lp(lp);
  require(out.status != LpStatus::Infeasible, "derivative LP lost its optimal face");
  if (out.status == LpStatus::Unbounded) return ExtReal::plus_inf();
  return ExtReal(-out.value);
}

ExtReal scalar_dini(const HFamilyMap& f, const Vec& zstar, const Vec& x, const Vec& u) {
  require(zstar.size() == f.zdim() && !is_zero(zstar) && f.cone()->in_dual(zstar),
          "derivative functional outside C- \\ {0}");
  return scalar_dini_at(f, f.evaluate(x), zstar, x, u);
}

ExtReal scalar_dini(const Scalarization& phi, const Vec& x, const Vec& u) {
  return scalar_dini(phi.map(), phi.zstar(), x, u);
}

SampledScalar scalar_dini_sampled(const Scalarization& phi, const Vec& x, const Vec& u, const SampleGrid& grid) {
  SampledScalar out;
  const ExtReal base = phi.value(x);
  Rational t = grid.t0;
  std::optional<ExtReal> prev;
  for (int k = 0; k <= grid.k_max; ++k, t *= grid.rho) {
    const ExtReal q = divide(residual(phi.value(add(x, scaled(t, u))), base), t);
    out.value = q;
    out.steps = k + 1;
    if (prev && *prev == q) {
      out.converged = true;
      return out;
    }
    prev = q;
  }
  return out;
}

SetDerivative set_dini_at(const HFamilyMap& f, const UpperSet& fx, const Vec& x, const Vec& u) {
  require(u.size() == f.xdim(), "derivative direction: dimension mismatch");
  if (!f.in_domain(x)) return {UpperSet::whole(f.cone()), true};
  if (!direction_enters(f, x, u)) return {UpperSet::empty(f.cone()), false};
  std::vector<HalfSpace> rows;
  for (const auto& r : f.rows()) {
    const ExtReal s = support(r.normal, fx);
    if (s != ExtReal(r.offset.value(x))) continue;
    rows.push_back({r.normal, r.offset.right_slope(x, u)});
  }
  return {UpperSet::from_rows(f.cone(), std::move(rows)), false};
}

SetDerivative set_dini(const HFamilyMap& f, const Vec& x, const Vec& u) { return set_dini_at(f, f.evaluate(x), x, u); }

UpperSet difference_quotient(const HFamilyMap& f, const UpperSet& fx, const Vec& x, const Vec& u, const Rational& t) {
  require(t > 0, "difference quotient needs t > 0");
  return scale(1 / t, inf_residual(f.evaluate(add(x, scaled(t, u))), fx));
}

SetBracket set_dini_upper_lower(const HFamilyMap& f, const Vec& x, const Vec& u, const SampleGrid& grid) {
  const UpperSet fx = f.evaluate(x);
  std::vector<UpperSet> window;
  Rational t = grid.t0;
  SetBracket out{UpperSet::whole(f.cone()), UpperSet::whole(f.cone()), true, 0};
  const std::size_t w = static_cast<std::size_t>(std::max(1, grid.window));
  for (int k = 0; k <= grid.k_max; ++k, t *= grid.rho) {
    window.push_back(difference_quotient(f, fx, x, u, t));
    if (window.size() > w) window.erase(window.begin());
    out.steps = k + 1;
    if (window.size() == w) {
      bool same = true;
      for (std::size_t i = 1; i < w && same; ++i) same = set_equal(window[0], window[i]);
      if (same) {
        out.upper = out.lower = window.back();
        out.gap = false;
        return out;
      }
    }
  }
  out.upper = lattice_sup(window, f.cone());
  out.lower = lattice_inf(window, f.cone());
  out.gap = !set_equal(out.upper, out.lower);
  return out;
}

std::vector<Vec> regularity_functionals(const HFamilyMap& f) {
  std::vector<Vec> out = f.cone()->base_vertices();
  for (const auto& r : f.rows()) out.push_back(f.cone()->normalize_to_base(r.normal));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SrVerdict check_SR(const HFamilyMap& f, const Vec& x, const Vec& u) {
  const UpperSet fx = f.evaluate(x);
  const UpperSet d = set_dini_at(f, fx, x, u).value;
  SrVerdict out;
  for (const auto& v : regularity_functionals(f)) {
    SrEntry e;
    e.zstar = v;
    e.scalar = scalar_dini_at(f, fx, v, x, u);
    e.set_value = negate(support(v, d));
    e.equal = e.scalar == e.set_value;
    e.inequality_holds = e.scalar <= e.set_value;
    out.pass = out.pass && e.equal;
    out.inequality_holds = out.inequality_holds && e.inequality_holds;
    out.entries.push_back(std::move(e));
  }
  return out;
}

WrVerdict check_WR(const HFamilyMap& f, const Vec& x, const Vec& u) {
  const UpperSet fx = f.evaluate(x);
  WrVerdict out{false, set_dini_at(f, fx, x, u).value, UpperSet::whole(f.cone())};
  std::vector<HalfSpace> rows;
  bool empty = false;
  for (const auto& v : regularity_functionals(f)) {
    const ExtReal p = scalar_dini_at(f, fx, v, x, u);
    if (p.is_minus_inf()) continue;
    if (p.is_plus_inf()) {
      empty = true;
      break;
    }
    rows.push_back({v, -p.value()});
  }
  out.reconstruction = empty ? UpperSet::empty(f.cone()) : UpperSet::from_rows(f.cone(), std::move(rows));
  out.pass = set_equal(out.derivative, out.reconstruction);
  return out;
}

}  // namespace setopt
