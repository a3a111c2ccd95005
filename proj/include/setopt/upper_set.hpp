#pragma once

#include <string>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/extended_real.hpp"
#include "setopt/polyhedron.hpp"

namespace setopt {

/// An element of G(Z,C): a closed convex set A with A + C = A, held as
/// { z | a_j·z <= c_j } with every normal a_j in C- \ {0}.
///
/// The whole space Z has no rows; the empty set carries an explicit flag.
/// Row lists may contain redundant rows; equality of sets is always decided
/// by mutual containment, never by comparing rows.
class UpperSet {
 public:
  static UpperSet whole(ConePtr cone);
  static UpperSet empty(ConePtr cone);
  /// The ordering cone itself, the neutral element of oplus.
  static UpperSet cone_set(ConePtr cone);
  /// {p} + C
  static UpperSet translate(ConePtr cone, const Vec& p);
  /// Throws StructuralError when a normal is zero or outside C-.
  static UpperSet from_rows(ConePtr cone, std::vector<HalfSpace> rows);

  const ConePtr& cone() const { return cone_; }
  std::size_t dimension() const { return cone_->dimension(); }
  const std::vector<HalfSpace>& rows() const { return rows_; }
  bool is_empty() const { return empty_; }
  bool is_whole() const { return !empty_ && rows_.empty(); }

  bool contains(const Vec& z) const;

  /// Same set with redundant rows removed, normals primitive, rows sorted.
  UpperSet canonical() const;
  /// One line per row of the canonical form: "a_1 ... a_m <= c".
  /// The empty set prints as a single infeasible row "0 ... 0 <= -1".
  std::string dump() const;

 private:
  UpperSet(ConePtr cone, std::vector<HalfSpace> rows, bool empty)
      : cone_(std::move(cone)), rows_(std::move(rows)), empty_(empty) {}
  ConePtr cone_;
  std::vector<HalfSpace> rows_;
  bool empty_;
};

/// A ≼ B iff B ⊆ A.
bool order_leq(const UpperSet& a, const UpperSet& b);
/// Mutual containment.
bool set_equal(const UpperSet& a, const UpperSet& b);

/// Closed convex hull of the union; the empty collection gives the empty set.
UpperSet lattice_inf(const std::vector<UpperSet>& sets, const ConePtr& cone);
/// Intersection; the empty collection gives Z.
UpperSet lattice_sup(const std::vector<UpperSet>& sets, const ConePtr& cone);

/// Closed Minkowski sum; the empty set dominates.
UpperSet oplus(const UpperSet& a, const UpperSet& b);
/// t·A for t > 0, and 0·A = C for every A.
UpperSet scale(const Rational& t, const UpperSet& a);
/// A -. B = { z | B + z ⊆ A }.
UpperSet inf_residual(const UpperSet& a, const UpperSet& b);
/// 0+A = { z | A + z ⊆ A }, with 0+∅ = ∅.
UpperSet recession_cone(const UpperSet& a);

/// σ(z*|A) = sup{ z*·z | z ∈ A }; -inf exactly for the empty set.
ExtReal support(const Vec& zstar, const UpperSet& a);

bool in_interior(const Vec& z, const UpperSet& a);
/// A ⊆ int B.
bool subset_of_interior(const UpperSet& a, const UpperSet& b);

/// Largest ε with A + εU ⊆ B for the l∞ unit ball U, as
/// min_j (c_j - σ(b_j|A)) / ||b_j||_1 over the rows of B.
/// +inf when A = ∅ or B = Z; -inf when B = ∅ ≠ A or some row of B is
/// unbounded over A.
ExtReal ball_margin(const UpperSet& a, const UpperSet& b);

/// ⋂_{z* in functionals} { z | z*·z <= σ(z*|A) }.
UpperSet scalar_reconstruction(const UpperSet& a, const std::vector<Vec>& functionals);

}  // namespace setopt
