#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setopt/upper_set.hpp"

namespace setopt {

/// Input that is well formed but violates a semantic requirement, such as a
/// vector map that is not C-convex.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x ↦ g·x + h
struct AffinePiece {
  Vec g;
  Rational h;
  Rational value(const Vec& x) const { return dot(g, x) + h; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Minimum of finitely many affine pieces; concave by construction.
class ConcavePWL {
 public:
  explicit ConcavePWL(std::vector<AffinePiece> pieces);
  static ConcavePWL affine(Vec g, Rational h) { return ConcavePWL({AffinePiece{std::move(g), std::move(h)}}); }

  std::size_t dimension() const { return pieces_.front().g.size(); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  Rational value(const Vec& x) const;
  /// Right derivative at x along u: the least slope g·u over pieces active at x.
  Rational right_slope(const Vec& x, const Vec& u) const;
  /// t ↦ value(x0 + t(x - x0)) as a one-variable function.
  ConcavePWL along(const Vec& x0, const Vec& x) const;
  /// Pointwise sum (pieces of all combinations), t·this for t >= 0.
  ConcavePWL plus(const ConcavePWL& other) const;
  ConcavePWL times(const Rational& t) const;
  ConcavePWL plus_constant(const Rational& c) const;

 private:
  std::vector<AffinePiece> pieces_;
};

/// Polyhedron { x | g·x <= h for every row } in X = R^n.
struct XDomain {
  std::size_t dim = 0;
  std::vector<HalfSpace> rows;

  static XDomain whole(std::size_t n) { return XDomain{n, {}}; }
  static XDomain box(const Vec& lo, const Vec& hi);
  bool contains(const Vec& x) const;
  /// sup{ t >= 0 | x + t·u in D }, possibly +inf; -inf when x is not in D.
  ExtReal step_limit(const Vec& x, const Vec& u) const;
};

/// Coordinate of ψ: the maximum of affine pieces (convex). One piece means
/// the coordinate is affine.
struct ConvexComponent {
  std::vector<AffinePiece> pieces;
  Rational value(const Vec& x) const;
  bool is_affine() const { return pieces.size() == 1; }
};

/// ψ: S -> Z with S a polyhedron and each component max-affine.
struct VectorMap {
  ConePtr cone;
  XDomain domain;
  std::vector<ConvexComponent> components;

  Vec value(const Vec& x) const;
  /// v·ψ as a concave function; nullopt when it is not concave in the
  /// piecewise form (v_i > 0 on a non-affine component).
  std::optional<ConcavePWL> weighted(const Vec& v) const;
};

struct MapRow {
  Vec normal;
  ConcavePWL offset;
};

/// x ↦ { z | a_j·z <= b_j(x) } on the domain D and ∅ outside.
/// Every f(x) with x in D is nonempty because the normals lie in C- \ {0}.
class HFamilyMap {
 public:
  HFamilyMap(std::string name, ConePtr cone, XDomain domain, std::vector<MapRow> rows);

  const std::string& name() const { return name_; }
  const ConePtr& cone() const { return cone_; }
  std::size_t xdim() const { return domain_.dim; }
  std::size_t zdim() const { return cone_->dimension(); }
  const XDomain& domain() const { return domain_; }
  const std::vector<MapRow>& rows() const { return rows_; }
  bool in_domain(const Vec& x) const { return domain_.contains(x); }
  UpperSet evaluate(const Vec& x) const;

  /// Set when the map is ψ^C for a C-convex vector map ψ.
  const std::shared_ptr<const VectorMap>& vector_source() const { return source_; }
  void set_vector_source(std::shared_ptr<const VectorMap> psi) { source_ = std::move(psi); }

 private:
  std::string name_;
  ConePtr cone_;
  XDomain domain_;
  std::vector<MapRow> rows_;
  std::shared_ptr<const VectorMap> source_;
};

using MapPtr = std::shared_ptr<const HFamilyMap>;

/// ψ^C(x) = {ψ(x)} + C on S. Throws ValidationError when some v·ψ is not
/// concave for a base vertex v.
HFamilyMap epigraphical_extension(std::string name, std::shared_ptr<const VectorMap> psi);

/// F^C for F(x) = ψ(x) + P with a fixed polytope P = co(points).
HFamilyMap set_extension(std::string name, std::shared_ptr<const VectorMap> psi, const std::vector<Vec>& points);

/// x ↦ φ_{f,z*}(x) = -σ(z*|f(x)); +inf off the domain.
class Scalarization {
 public:
  Scalarization(MapPtr f, Vec zstar);
  const Vec& zstar() const { return zstar_; }
  const HFamilyMap& map() const { return *f_; }
  ExtReal value(const Vec& x) const;

 private:
  MapPtr f_;
  Vec zstar_;
};

Scalarization scalarize(MapPtr f, Vec zstar);

/// t ↦ f(x0 + t(x - x0)) on [0,1], ∅ elsewhere.
HFamilyMap restrict(const HFamilyMap& f, const Vec& x0, const Vec& x);

struct ConvexityReport {
  bool convex = true;
  std::string reason;
  /// Exact pair (x1, x2) and functional z* with a violated midpoint inequality.
  Vec x1, x2, zstar;
};

/// The offsets are concave by construction, which certifies every φ_{f,v}.
/// The midpoint inequality is additionally checked over all pairs of
/// `probes` lying in D and every base vertex.
ConvexityReport validate_convexity(const HFamilyMap& f, const std::vector<Vec>& probes);

}  // namespace setopt
