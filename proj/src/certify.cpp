#include "setopt/certify.hpp"

#include <algorithm>
#include <functional>

namespace setopt {

namespace {

struct NamedCondition {
  Condition id;
  std::string_view name;
};

constexpr std::array<NamedCondition, 14> kNames{{
    {Condition::Min, "Min"},     {Condition::WlMin, "w-l-Min"}, {Condition::WscMin, "w-sc-Min"},
    {Condition::WMin, "w-Min"},  {Condition::SVI_M, "SVI_M"},   {Condition::svi_M, "svi_M"},
    {Condition::MVI_M, "MVI_M"}, {Condition::mvi_M, "mvi_M"},   {Condition::SVI_W, "SVI_W"},
    {Condition::svi_W, "svi_W"}, {Condition::MVI_W, "MVI_W"},   {Condition::mvi_W, "mvi_W"},
    {Condition::SR, "SR"},       {Condition::WR, "WR"},
}};

void dedupe_in_order(std::vector<Vec>& v) {
  std::vector<Vec> out;
  for (auto& p : v)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  v = std::move(out);
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= total; ++i) {
    cur.push_back(i);
    compositions(parts - 1, total - i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string_view condition_name(Condition c) {
  for (const auto& n : kNames)
    if (n.id == c) return n.name;
  return "?";
}

std::optional<Condition> parse_condition(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.id;
  return std::nullopt;
}

bool is_scalarized(Condition c) {
  return c == Condition::WscMin || c == Condition::svi_M || c == Condition::mvi_M || c == Condition::svi_W ||
         c == Condition::mvi_W;
}

bool is_weak(Condition c) {
  return c == Condition::WlMin || c == Condition::WscMin || c == Condition::WMin || c == Condition::SVI_W ||
         c == Condition::svi_W || c == Condition::MVI_W || c == Condition::mvi_W;
}

TestSet TestSet::of(std::vector<Vec> points) {
  require(!points.empty(), "test set must be nonempty");
  for (const auto& p : points) require(p.size() == points.front().size(), "test points differ in dimension");
  dedupe_in_order(points);
  return TestSet{std::move(points)};
}

TestSet TestSet::grid(const Vec& lo, const Vec& hi, int steps) {
  require(lo.size() == hi.size() && !lo.empty() && steps >= 1, "malformed grid specification");
  std::vector<Vec> pts{Vec{}};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& p : pts)
      for (int k = 0; k <= steps; ++k) {
        Vec q = p;
        q.push_back(lo[i] + (hi[i] - lo[i]) * frac(k, steps));
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return of(std::move(pts));
}

std::string WitnessSearch::describe() const {
  switch (strategy) {
    case Strategy::Vertices: return "vertices";
    case Strategy::MStar: return "mstar(" + std::to_string(mstar.size()) + ")";
    case Strategy::Grid: return "grid:" + std::to_string(grid);
    case Strategy::Regions: return "regions";
  }
  return "?";
}

std::vector<Vec> base_grid(const OrderingCone& cone, int k) {
  require(k >= 1, "grid resolution must be positive");
  const auto& verts = cone.base_vertices();
  std::vector<std::vector<int>> weights;
  std::vector<int> cur;
  compositions(static_cast<int>(verts.size()), k, cur, weights);
  std::vector<Vec> out;
  for (const auto& w : weights) {
    Vec p = zeros(cone.dimension());
    for (std::size_t i = 0; i < verts.size(); ++i) p = add(p, scaled(frac(w[i], k), verts[i]));
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CertificationContext::CertificationContext(MapPtr f, Vec x0, WitnessSearch search)
    : f_(std::move(f)), x0_(std::move(x0)), search_(std::move(search)) {
  require(x0_.size() == f_->xdim(), "candidate point: dimension mismatch");
  if (!f_->in_domain(x0_)) throw ValidationError("candidate point " + to_string(x0_) + " is outside dom f");
}

const UpperSet& CertificationContext::value(const Vec& x) {
  auto it = values_.find(x);
  if (it == values_.end()) it = values_.emplace(x, f_->evaluate(x)).first;
  return it->second;
}

const UpperSet& CertificationContext::recession(const Vec& x) {
  auto it = recessions_.find(x);
  if (it == recessions_.end()) it = recessions_.emplace(x, recession_cone(value(x))).first;
  return it->second;
}

ExtReal CertificationContext::sigma(const Vec& zstar, const Vec& x) {
  auto key = std::make_pair(zstar, x);
  auto it = sigmas_.find(key);
  if (it == sigmas_.end()) it = sigmas_.emplace(std::move(key), support(zstar, value(x))).first;
  return it->second;
}

const SetDerivative& CertificationContext::derivative(const Vec& x, const Vec& u) {
  auto key = std::make_pair(x, u);
  auto it = derivatives_.find(key);
  if (it == derivatives_.end()) it = derivatives_.emplace(std::move(key), set_dini_at(*f_, value(x), x, u)).first;
  return it->second;
}

ExtReal CertificationContext::scalar_derivative(const Vec& zstar, const Vec& x, const Vec& u) {
  std::array<Vec, 3> key{zstar, x, u};
  auto it = scalar_derivatives_.find(key);
  if (it == scalar_derivatives_.end())
    it = scalar_derivatives_.emplace(std::move(key), scalar_dini_at(*f_, value(x), zstar, x, u)).first;
  return it->second;
}

bool CertificationContext::same_as_x0(const Vec& x) { return x == x0_ || set_equal(value(x), value(x0_)); }

const std::vector<Vec>& CertificationContext::candidates() {
  if (candidates_) return *candidates_;
  const OrderingCone& cone = *f_->cone();
  std::vector<Vec> out;
  switch (search_.strategy) {
    case WitnessSearch::Strategy::Vertices: out = cone.base_vertices(); break;
    case WitnessSearch::Strategy::MStar:
      require(!search_.mstar.empty(), "mstar strategy needs at least one functional");
      for (const auto& z : search_.mstar) {
        require(z.size() == cone.dimension(), "mstar functional: dimension mismatch");
        out.push_back(cone.normalize_to_base(z));
      }
      break;
    case WitnessSearch::Strategy::Grid: out = base_grid(cone, search_.grid); break;
    case WitnessSearch::Strategy::Regions: out = regularity_functionals(*f_); break;
  }
  dedupe_in_order(out);
  candidates_ = std::move(out);
  return *candidates_;
}

ClauseResult CertificationContext::clause(Condition c, const Vec& x) {
  require(x.size() == f_->xdim(), "comparison point: dimension mismatch");
  const UpperSet& f0 = value(x0_);
  const UpperSet& fx = value(x);
  ClauseResult r;
  if (f0.is_whole() && c != Condition::Min && c != Condition::MVI_M && c != Condition::mvi_M &&
      c != Condition::SR && c != Condition::WR) {
    r.detail = "f(x0) = Z";
    return r;
  }
  const Vec to_x = sub(x, x0_);
  const Vec to_x0 = sub(x0_, x);
  auto exclude = [&](const char* why) {
    r.excluded = true;
    r.detail = why;
    return r;
  };
  // Existential search over candidate functionals.
  auto search = [&](const std::function<bool(const Vec&)>& pred, const char* none) {
    for (const auto& z : candidates()) {
      if (pred(z)) {
        r.zstar = z;
        return r;
      }
    }
    r.holds = false;
    r.detail = none;
    return r;
  };

  switch (c) {
    case Condition::Min:
      if (order_leq(fx, f0) && !order_leq(f0, fx)) {
        r.holds = false;
        r.detail = "f(x0) is a proper subset of f(x)";
      }
      return r;
    case Condition::WlMin:
      if (subset_of_interior(f0, fx)) {
        r.holds = false;
        r.detail = "f(x0) lies in int f(x)";
      }
      return r;
    case Condition::WMin: {
      const ExtReal m = ball_margin(f0, fx);
      if (m > ExtReal(0)) {
        r.holds = false;
        r.detail = "f(x0) + eps·U lies in f(x) for eps = " + m.str();
      }
      return r;
    }
    case Condition::WscMin:
      return search(
          [&](const Vec& z) {
            const ExtReal sx = sigma(z, x);
            return !sx.is_plus_inf() && negate(sigma(z, x0_)) <= negate(sx);
          },
          "phi(x0) > phi(x) or phi(x) = -inf for every candidate");
    case Condition::SVI_M:
      if (!f_->in_domain(x)) return exclude("x outside dom f");
      if (same_as_x0(x)) return exclude("f(x) = f(x0)");
      if (derivative(x0_, to_x).value.contains(zeros(f_->zdim()))) {
        r.holds = false;
        r.detail = "0 lies in f'(x0, x - x0)";
      }
      return r;
    case Condition::svi_M:
      if (!f_->in_domain(x)) return exclude("x outside dom f");
      if (same_as_x0(x)) return exclude("f(x) = f(x0)");
      return search([&](const Vec& z) { return scalar_derivative(z, x0_, to_x) > ExtReal(0); },
                    "no candidate with phi'(x0, x - x0) > 0");
    case Condition::SVI_W:
      if (in_interior(zeros(f_->zdim()), derivative(x0_, to_x).value)) {
        r.holds = false;
        r.detail = "0 lies in int f'(x0, x - x0)";
      }
      return r;
    case Condition::svi_W:
      return search([&](const Vec& z) { return scalar_derivative(z, x0_, to_x) >= ExtReal(0); },
                    "every candidate has phi'(x0, x - x0) < 0");
    case Condition::MVI_M:
      if (same_as_x0(x)) return exclude("f(x) = f(x0)");
      if (order_leq(recession(x), derivative(x, to_x0).value)) {
        r.holds = false;
        r.detail = "f'(x, x0 - x) lies in 0+f(x)";
      }
      return r;
    case Condition::mvi_M:
      if (same_as_x0(x)) return exclude("f(x) = f(x0)");
      return search(
          [&](const Vec& z) { return !sigma(z, x).is_plus_inf() && scalar_derivative(z, x, to_x0) < ExtReal(0); },
          "no candidate with phi(x) != -inf and phi'(x, x0 - x) < 0");
    case Condition::MVI_W:
      if (subset_of_interior(derivative(x, to_x0).value, recession(x))) {
        r.holds = false;
        r.detail = "f'(x, x0 - x) lies in int 0+f(x)";
      }
      return r;
    case Condition::mvi_W:
      return search(
          [&](const Vec& z) { return !sigma(z, x).is_plus_inf() && scalar_derivative(z, x, to_x0) <= ExtReal(0); },
          "no candidate with phi(x) != -inf and phi'(x, x0 - x) <= 0");
    case Condition::SR: {
      const bool at_x0 = check_SR(*f_, x0_, to_x).pass;
      const bool at_x = check_SR(*f_, x, to_x0).pass;
      r.holds = at_x0 && at_x;
      if (!r.holds) r.detail = at_x0 ? "fails at (x, x0 - x)" : "fails at (x0, x - x0)";
      return r;
    }
    case Condition::WR: {
      const bool at_x0 = check_WR(*f_, x0_, to_x).pass;
      const bool at_x = check_WR(*f_, x, to_x0).pass;
      r.holds = at_x0 && at_x;
      if (!r.holds) r.detail = at_x0 ? "fails at (x, x0 - x)" : "fails at (x0, x - x0)";
      return r;
    }
  }
  return r;
}

ConditionVerdict CertificationContext::certify(Condition c, const TestSet& t) {
  ConditionVerdict v;
  v.id = c;
  for (const auto& x : t.points) {
    PointVerdict p{x, clause(c, x)};
    if (!p.clause.holds && v.holds) {
      v.holds = false;
      v.witness_x = x;
    }
    if (p.clause.zstar && !v.witness_zstar && v.holds) v.witness_zstar = p.clause.zstar;
    v.points.push_back(std::move(p));
  }
  if (v.holds) v.caveats.push_back("testset-relative");
  if (is_scalarized(c) && !search_.complete()) v.caveats.push_back("incomplete-witness-search:" + search_.describe());
  return v;
}

ConditionVerdict certify_min(const MapPtr& f, const Vec& x0, const TestSet& t) {
  return CertificationContext(f, x0).certify(Condition::Min, t);
}

ConditionVerdict certify_weak_min(const MapPtr& f, const Vec& x0, const TestSet& t, WeakVariant v,
                                  const WitnessSearch& w) {
  const Condition c = v == WeakVariant::L ? Condition::WlMin : v == WeakVariant::Sc ? Condition::WscMin : Condition::WMin;
  return CertificationContext(f, x0, w).certify(c, t);
}

ConditionVerdict certify_svi(const MapPtr& f, const Vec& x0, const TestSet& t, bool strong, bool scalarized,
                             const WitnessSearch& w) {
  const Condition c = strong ? (scalarized ? Condition::svi_M : Condition::SVI_M)
                             : (scalarized ? Condition::svi_W : Condition::SVI_W);
  return CertificationContext(f, x0, w).certify(c, t);
}

ConditionVerdict certify_mvi(const MapPtr& f, const Vec& x0, const TestSet& t, bool strong, bool scalarized,
                             const WitnessSearch& w) {
  const Condition c = strong ? (scalarized ? Condition::mvi_M : Condition::MVI_M)
                             : (scalarized ? Condition::mvi_W : Condition::MVI_W);
  return CertificationContext(f, x0, w).certify(c, t);
}

}  // namespace setopt
