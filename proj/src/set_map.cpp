#include "setopt/set_map.hpp"

#include <algorithm>

namespace setopt {

namespace {

std::vector<AffinePiece> dedupe(std::vector<AffinePiece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const AffinePiece& a, const AffinePiece& b) {
    return a.g != b.g ? a.g < b.g : a.h < b.h;
  });
  // Equal slopes: keep the lowest intercept, the others are never active.
  std::vector<AffinePiece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().g == p.g) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ConcavePWL::ConcavePWL(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
  require(!pieces_.empty(), "concave offset needs at least one piece");
  for (const auto& p : pieces_) require(p.g.size() == pieces_.front().g.size(), "offset pieces differ in dimension");
  pieces_ = dedupe(std::move(pieces_));
}

Rational ConcavePWL::value(const Vec& x) const {
  require(x.size() == dimension(), "offset evaluation: dimension mismatch");
  Rational best = pieces_.front().value(x);
  for (std::size_t i = 1; i < pieces_.size(); ++i) best = std::min(best, pieces_[i].value(x));
  return best;
}

Rational ConcavePWL::right_slope(const Vec& x, const Vec& u) const {
  require(u.size() == dimension(), "offset slope: dimension mismatch");
  const Rational v = value(x);
  std::optional<Rational> best;
  for (const auto& p : pieces_) {
    if (p.value(x) != v) continue;
    Rational s = dot(p.g, u);
    if (!best || s < *best) best = std::move(s);
  }
  return *best;
}

ConcavePWL ConcavePWL::along(const Vec& x0, const Vec& x) const {
  const Vec d = sub(x, x0);
  std::vector<AffinePiece> out;
  for (const auto& p : pieces_) out.push_back({Vec{dot(p.g, d)}, p.value(x0)});
  return ConcavePWL(std::move(out));
}

ConcavePWL ConcavePWL::plus(const ConcavePWL& other) const {
  require(other.dimension() == dimension(), "offset sum: dimension mismatch");
  std::vector<AffinePiece> out;
  for (const auto& a : pieces_)
    for (const auto& b : other.pieces_) out.push_back({add(a.g, b.g), a.h + b.h});
  return ConcavePWL(std::move(out));
}

ConcavePWL ConcavePWL::times(const Rational& t) const {
  require(t >= 0, "offset scaling needs t >= 0");
  std::vector<AffinePiece> out;
  for (const auto& p : pieces_) out.push_back({scaled(t, p.g), t * p.h});
  return ConcavePWL(std::move(out));
}

ConcavePWL ConcavePWL::plus_constant(const Rational& c) const {
  std::vector<AffinePiece> out = pieces_;
  for (auto& p : out) p.h += c;
  return ConcavePWL(std::move(out));
}

XDomain XDomain::box(const Vec& lo, const Vec& hi) {
  require(lo.size() == hi.size(), "box bounds differ in dimension");
  XDomain d{lo.size(), {}};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    Vec g = zeros(lo.size());
    g[i] = 1;
    d.rows.push_back({g, hi[i]});
    g[i] = -1;
    d.rows.push_back({g, -lo[i]});
  }
  return d;
}

bool XDomain::contains(const Vec& x) const {
  require(x.size() == dim, "domain membership: dimension mismatch");
  return std::all_of(rows.begin(), rows.end(), [&](const HalfSpace& h) { return dot(h.normal, x) <= h.offset; });
}

ExtReal XDomain::step_limit(const Vec& x, const Vec& u) const {
  if (!contains(x)) return ExtReal::minus_inf();
  require(u.size() == dim, "domain step: dimension mismatch");
  ExtReal best = ExtReal::plus_inf();
  for (const auto& h : rows) {
    const Rational gu = dot(h.normal, u);
    if (gu <= 0) continue;
    const ExtReal t((h.offset - dot(h.normal, x)) / gu);
    if (t < best) best = t;
  }
  return best;
}

Rational ConvexComponent::value(const Vec& x) const {
  Rational best = pieces.front().value(x);
  for (std::size_t i = 1; i < pieces.size(); ++i) best = std::max(best, pieces[i].value(x));
  return best;
}

Vec VectorMap::value(const Vec& x) const {
  Vec out;
  for (const auto& c : components) out.push_back(c.value(x));
  return out;
}

std::optional<ConcavePWL> VectorMap::weighted(const Vec& v) const {
  require(v.size() == components.size(), "weighted component sum: dimension mismatch");
  ConcavePWL acc = ConcavePWL::affine(zeros(domain.dim), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] > 0 && !components[i].is_affine()) return std::nullopt;
    std::vector<AffinePiece> scaled_pieces;
    for (const auto& p : components[i].pieces) scaled_pieces.push_back({scaled(v[i], p.g), v[i] * p.h});
    acc = acc.plus(ConcavePWL(std::move(scaled_pieces)));
  }
  return acc;
}

HFamilyMap::HFamilyMap(std::string name, ConePtr cone, XDomain domain, std::vector<MapRow> rows)
    : name_(std::move(name)), cone_(std::move(cone)), domain_(std::move(domain)), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    require(r.normal.size() == cone_->dimension(), "map normal dimension mismatch");
    require(!is_zero(r.normal) && cone_->in_dual(r.normal), "map normal outside C- \\ {0}");
    require(r.offset.dimension() == domain_.dim, "map offset dimension mismatch");
  }
  for (const auto& h : domain_.rows) require(h.normal.size() == domain_.dim, "domain row dimension mismatch");
}

UpperSet HFamilyMap::evaluate(const Vec& x) const {
  if (!in_domain(x)) return UpperSet::empty(cone_);
  std::vector<HalfSpace> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back({r.normal, r.offset.value(x)});
  return UpperSet::from_rows(cone_, std::move(rows));
}

namespace {

void check_psi(const VectorMap& psi) {
  require(psi.cone && psi.components.size() == psi.cone->dimension(), "vector map: component count differs from dim Z");
  for (const auto& c : psi.components) {
    require(!c.pieces.empty(), "vector map component without pieces");
    for (const auto& p : c.pieces) require(p.g.size() == psi.domain.dim, "vector map piece dimension mismatch");
  }
}

ConcavePWL weighted_or_throw(const VectorMap& psi, const Vec& v) {
  auto w = psi.weighted(v);
  if (!w) {
    throw ValidationError("vector map is not C-convex in piecewise form: v·ψ is not concave for v = " + to_string(v));
  }
  return *w;
}

}  // namespace

HFamilyMap epigraphical_extension(std::string name, std::shared_ptr<const VectorMap> psi) {
  check_psi(*psi);
  std::vector<MapRow> rows;
  for (const auto& v : psi->cone->base_vertices()) rows.push_back({v, weighted_or_throw(*psi, v)});
  HFamilyMap f(std::move(name), psi->cone, psi->domain, std::move(rows));
  f.set_vector_source(psi);
  return f;
}

HFamilyMap set_extension(std::string name, std::shared_ptr<const VectorMap> psi, const std::vector<Vec>& points) {
  check_psi(*psi);
  require(!points.empty(), "set extension needs a nonempty polytope");
  std::vector<UpperSet> translates;
  for (const auto& p : points) translates.push_back(UpperSet::translate(psi->cone, p));
  const UpperSet base = lattice_inf(translates, psi->cone).canonical();
  std::vector<MapRow> rows;
  for (const auto& h : base.rows()) {
    const ExtReal s = support(h.normal, base);
    rows.push_back({h.normal, weighted_or_throw(*psi, h.normal).plus_constant(s.value())});
  }
  return HFamilyMap(std::move(name), psi->cone, psi->domain, std::move(rows));
}

Scalarization::Scalarization(MapPtr f, Vec zstar) : f_(std::move(f)), zstar_(std::move(zstar)) {
  require(zstar_.size() == f_->zdim(), "scalarization: dimension mismatch");
  require(!is_zero(zstar_) && f_->cone()->in_dual(zstar_), "scalarization functional outside C- \\ {0}");
}

ExtReal Scalarization::value(const Vec& x) const { return negate(support(zstar_, f_->evaluate(x))); }

Scalarization scalarize(MapPtr f, Vec zstar) { return Scalarization(std::move(f), std::move(zstar)); }

HFamilyMap restrict(const HFamilyMap& f, const Vec& x0, const Vec& x) {
  require(x0.size() == f.xdim() && x.size() == f.xdim(), "restriction: dimension mismatch");
  const Vec d = sub(x, x0);
  XDomain dom{1, {}};
  for (const auto& h : f.domain().rows) dom.rows.push_back({Vec{dot(h.normal, d)}, h.offset - dot(h.normal, x0)});
  dom.rows.push_back({Vec{Rational(-1)}, 0});
  dom.rows.push_back({Vec{Rational(1)}, 1});
  std::vector<MapRow> rows;
  for (const auto& r : f.rows()) rows.push_back({r.normal, r.offset.along(x0, x)});
  return HFamilyMap(f.name() + "|restricted", f.cone(), std::move(dom), std::move(rows));
}

ConvexityReport validate_convexity(const HFamilyMap& f, const std::vector<Vec>& probes) {
  ConvexityReport rep;
  rep.reason = "offsets are minima of affine pieces, so every scalarization is convex";
  std::vector<Vec> inside;
  for (const auto& p : probes)
    if (f.in_domain(p)) inside.push_back(p);
  const Rational half = frac(1, 2);
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      const Vec mid = scaled(half, add(inside[i], inside[j]));
      const UpperSet a = f.evaluate(inside[i]), b = f.evaluate(inside[j]), c = f.evaluate(mid);
      for (const auto& v : f.cone()->base_vertices()) {
        const ExtReal lhs = negate(support(v, c));
        const ExtReal rhs = inf_add(scale(half, negate(support(v, a))), scale(half, negate(support(v, b))));
        if (lhs > rhs) {
          rep.convex = false;
          rep.reason = "midpoint inequality violated";
          rep.x1 = inside[i];
          rep.x2 = inside[j];
          rep.zstar = v;
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace setopt
