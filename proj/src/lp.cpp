#include "setopt/lp.hpp"

#include <cstddef>

namespace setopt {

void LinearProgram::add_row(Vec row, RowSense sense, Rational bound) {
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(bound));
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dense tableau over nonnegative columns. The last column holds the
// right-hand side. The basis lists the basic column of every row.
struct Tableau {
  std::vector<Vec> t;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;  // excluding rhs

  const Rational& rhs(std::size_t i) const { return t[i][columns]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      }
    }
    basis[r] = c;
  }
};

enum class PhaseResult { Optimal, Unbounded };

// Minimizes cost·x over the tableau using Bland's rule. Columns with
// allowed[j] == false never enter. On unboundedness, `entering` is set.
PhaseResult run_simplex(Tableau& tab, const Vec& cost, const std::vector<bool>& allowed,
                        std::size_t& entering) {
  for (;;) {
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < tab.columns && enter == kNone; ++j) {
      if (!allowed[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < tab.t.size(); ++i) {
        if (tab.t[i][j] != 0) reduced -= cost[tab.basis[i]] * tab.t[i][j];
      }
      if (reduced < 0) enter = j;
    }
    if (enter == kNone) return PhaseResult::Optimal;

    std::size_t leave = kNone;
    Rational best_ratio;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
      if (tab.t[i][enter] <= 0) continue;
      Rational ratio = tab.rhs(i) / tab.t[i][enter];
      if (leave == kNone || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == kNone) {
      entering = enter;
      return PhaseResult::Unbounded;
    }
    tab.pivot(leave, enter);
  }
}

Vec column_values(const Tableau& tab) {
  Vec x(tab.columns, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i) x[tab.basis[i]] = tab.rhs(i);
  return x;
}

Vec to_free(const Vec& cols, std::size_t n) {
  Vec z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = cols[k] - cols[n + k];
  return z;
}

LpOutcome solve_impl(const LinearProgram& lp, bool want_farkas);

Vec farkas_certificate(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.dimension();
  LinearProgram dual;
  dual.objective = zeros(m);
  dual.maximize = false;
  for (std::size_t k = 0; k < n; ++k) {
    Vec row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = lp.rows[i][k];
    dual.add_row(std::move(row), RowSense::Eq, 0);
  }
  dual.add_row(lp.rhs, RowSense::Eq, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.senses[i] == RowSense::Eq) continue;
    Vec unit = zeros(m);
    unit[i] = 1;
    dual.add_row(std::move(unit), lp.senses[i] == RowSense::Leq ? RowSense::Geq : RowSense::Leq, 0);
  }
  LpOutcome out = solve_impl(dual, false);
  return out.status == LpStatus::Optimal ? out.point : Vec{};
}

LpOutcome solve_impl(const LinearProgram& lp, bool want_farkas) {
  const std::size_t n = lp.dimension();
  const std::size_t m = lp.rows.size();
  require(lp.senses.size() == m && lp.rhs.size() == m, "solve_lp: row/sense/rhs count mismatch");
  for (const auto& r : lp.rows) require(r.size() == n, "solve_lp: row dimension differs from objective");

  std::size_t slacks = 0;
  std::size_t artificials = 0;
  std::vector<RowSense> sense(m);
  std::vector<bool> flip(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = lp.senses[i];
    if (lp.rhs[i] < 0) {
      flip[i] = true;
      if (sense[i] == RowSense::Leq) sense[i] = RowSense::Geq;
      else if (sense[i] == RowSense::Geq) sense[i] = RowSense::Leq;
    }
    if (sense[i] != RowSense::Eq) ++slacks;
    if (sense[i] != RowSense::Leq) ++artificials;
  }

  Tableau tab;
  tab.columns = 2 * n + slacks + artificials;
  tab.t.assign(m, Vec(tab.columns + 1, Rational(0)));
  tab.basis.assign(m, kNone);
  const std::size_t first_art = 2 * n + slacks;
  std::size_t next_slack = 2 * n;
  std::size_t next_art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign = flip[i] ? -1 : 1;
    for (std::size_t k = 0; k < n; ++k) {
      tab.t[i][k] = sign * lp.rows[i][k];
      tab.t[i][n + k] = -tab.t[i][k];
    }
    tab.t[i][tab.columns] = sign * lp.rhs[i];
    if (sense[i] == RowSense::Leq) {
      tab.t[i][next_slack] = 1;
      tab.basis[i] = next_slack++;
    } else {
      if (sense[i] == RowSense::Geq) tab.t[i][next_slack++] = -1;
      tab.t[i][next_art] = 1;
      tab.basis[i] = next_art++;
    }
  }

  LpOutcome out;
  std::size_t entering = kNone;
  if (artificials > 0) {
    Vec cost(tab.columns, Rational(0));
    for (std::size_t j = first_art; j < tab.columns; ++j) cost[j] = 1;
    std::vector<bool> allowed(tab.columns, true);
    run_simplex(tab, cost, allowed, entering);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] >= first_art) infeas += tab.rhs(i);
    }
    if (infeas > 0) {
      out.status = LpStatus::Infeasible;
      if (want_farkas) out.farkas = farkas_certificate(lp);
      return out;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.t.size();) {
      if (tab.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_art && col == kNone; ++j) {
        if (tab.t[i][j] != 0) col = j;
      }
      if (col == kNone) {
        tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  Vec cost(tab.columns, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    const Rational c = lp.maximize ? -lp.objective[k] : lp.objective[k];
    cost[k] = c;
    cost[n + k] = -c;
  }
  std::vector<bool> allowed(tab.columns, true);
  for (std::size_t j = first_art; j < tab.columns; ++j) allowed[j] = false;
  const PhaseResult phase2 = run_simplex(tab, cost, allowed, entering);
  const Vec cols = column_values(tab);
  out.point = to_free(cols, n);
  if (phase2 == PhaseResult::Unbounded) {
    Vec dir(tab.columns, Rational(0));
    dir[entering] = 1;
    for (std::size_t i = 0; i < tab.t.size(); ++i) dir[tab.basis[i]] = -tab.t[i][entering];
    out.status = LpStatus::Unbounded;
    out.ray = to_free(dir, n);
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = dot(lp.objective, out.point);
  return out;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) { return solve_impl(lp, true); }

bool satisfies(const LinearProgram& lp, const Vec& x) {
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const Rational lhs = dot(lp.rows[i], x);
    switch (lp.senses[i]) {
      case RowSense::Leq:
        if (lhs > lp.rhs[i]) return false;
        break;
      case RowSense::Geq:
        if (lhs < lp.rhs[i]) return false;
        break;
      case RowSense::Eq:
        if (lhs != lp.rhs[i]) return false;
        break;
    }
  }
  return true;
}

StrictFeasibility strictly_feasible(const std::vector<Vec>& rows, const std::vector<RowSense>& senses,
                                    const Vec& rhs, std::size_t dimension) {
  require(rows.size() == senses.size() && rows.size() == rhs.size(),
          "strictly_feasible: row/sense/rhs count mismatch");
  StrictFeasibility result;
  if (rows.empty()) {
    result.feasible = true;
    result.witness = zeros(dimension);
    return result;
  }
  LinearProgram lp;
  lp.objective = zeros(dimension + 1);
  lp.objective[dimension] = 1;
  lp.maximize = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == dimension, "strictly_feasible: row dimension mismatch");
    require(senses[i] != RowSense::Eq, "strictly_feasible: equality rows have no strict form");
    Vec row = rows[i];
    row.push_back(senses[i] == RowSense::Leq ? 1 : -1);
    lp.add_row(std::move(row), senses[i], rhs[i]);
  }
  Vec cap = zeros(dimension + 1);
  cap[dimension] = 1;
  lp.add_row(std::move(cap), RowSense::Leq, 1);
  const LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Optimal && out.value > 0) {
    result.feasible = true;
    result.witness.assign(out.point.begin(), out.point.begin() + static_cast<std::ptrdiff_t>(dimension));
  }
  return result;
}

}  // namespace setopt
