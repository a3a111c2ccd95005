#pragma once

#include <vector>

#include "setopt/rational.hpp"

namespace setopt {

enum class RowSense { Leq, Eq, Geq };

/// A linear program over free (sign-unrestricted) variables:
///   optimize objective·x  subject to  rows[i]·x (sense[i]) rhs[i].
/// Sign constraints are ordinary rows.
struct LinearProgram {
  Vec objective;
  std::vector<Vec> rows;
  std::vector<RowSense> senses;
  Vec rhs;
  bool maximize = true;

  std::size_t dimension() const { return objective.size(); }
  void add_row(Vec row, RowSense sense, Rational bound);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Optimal: `value` and an attaining `point`.
/// Unbounded: `point` is feasible and `ray` is a recession direction along
///   which the objective improves without bound.
/// Infeasible: `farkas` holds row multipliers y with y·A = 0 and y·rhs < 0,
///   signed so that y_i >= 0 on <= rows and y_i <= 0 on >= rows.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vec point;
  Vec ray;
  Vec farkas;
};

/// Exact two-phase primal simplex with Bland's rule.
LpOutcome solve_lp(const LinearProgram& lp);

/// Residuals of a point against every row (true when all rows hold exactly).
bool satisfies(const LinearProgram& lp, const Vec& x);

struct StrictFeasibility {
  bool feasible = false;
  Vec witness;
};

/// Is there a point satisfying every row of the (<=/>=) system strictly?
/// Decided by maximizing a common slack capped at 1; equality rows are
/// rejected as structurally meaningless here.
StrictFeasibility strictly_feasible(const std::vector<Vec>& rows, const std::vector<RowSense>& senses,
                                    const Vec& rhs, std::size_t dimension);

}  // namespace setopt
