#include "thermo/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace thermo {

namespace {

constexpr double kPivotTol = 1e-11;

// Dense tableau with explicit basis bookkeeping. Columns [0, n) are the
// original variables, [n, n+m) the phase-1 artificials.
struct Tableau {
  int m, n;
  Mat rows;                 // m x (n + m)
  Vec rhs;                  // >= 0 throughout
  std::vector<int> basis;   // basis[i] = column basic in row i
  std::vector<bool> active; // redundant rows get switched off

  void pivot(int row, int col) {
    const double piv = rows[row][col];
    const double inv = 1.0 / piv;
    for (double& v : rows[row]) v *= inv;
    rhs[row] *= inv;
    rows[row][col] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == row || !active[i]) continue;
      const double f = rows[i][col];
      if (f == 0.0) continue;
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[row][j];
      rows[i][col] = 0.0;
      rhs[i] -= f * rhs[row];
      if (rhs[i] < 0.0 && rhs[i] > -kPivotTol) rhs[i] = 0.0;
    }
    basis[row] = col;
  }
};

// Bland's rule: smallest eligible entering column, leaving row by the ratio
// test with smallest basic variable breaking ties. Returns false when no
// entering column exists (optimal).
enum class StepResult { Optimal, Pivoted, Unbounded };

StepResult simplex_step(Tableau& t, const Vec& cost, int max_col) {
  // Reduced costs from the row-transformed tableau.
  int enter = -1;
  for (int j = 0; j < max_col; ++j) {
    double red = cost[j];
    for (int i = 0; i < t.m; ++i) {
      if (!t.active[i]) continue;
      const double cb = cost[t.basis[i]];
      if (cb != 0.0) red -= cb * t.rows[i][j];
    }
    if (red < -1e-10) {
      enter = j;
      break;
    }
  }
  if (enter < 0) return StepResult::Optimal;

  int leave = -1;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < t.m; ++i) {
    if (!t.active[i] || t.rows[i][enter] <= kPivotTol) continue;
    const double ratio = t.rhs[i] / t.rows[i][enter];
    if (ratio < best - 1e-13 ||
        (ratio < best + 1e-13 && (leave < 0 || t.basis[i] < t.basis[leave]))) {
      best = ratio;
      leave = i;
    }
  }
  if (leave < 0) return StepResult::Unbounded;
  t.pivot(leave, enter);
  return StepResult::Pivoted;
}

}  // namespace

LpSolution DenseSimplexSolver::solve(const LpProblem& problem) const {
  // Degenerate instances can stall the strict-tolerance pivoting. A tiny
  // deterministic rhs perturbation breaks the ties; it moves the optimum by
  // O(1e-11), far below every geometric tolerance in the library.
  try {
    return solve_once(problem);
  } catch (const LpError&) {
  }
  LpProblem jiggled = problem;
  for (size_t i = 0; i < jiggled.b.size(); ++i) {
    jiggled.b[i] += 1e-11 * static_cast<double>(i + 1);
  }
  return solve_once(jiggled);
}

LpSolution DenseSimplexSolver::solve_once(const LpProblem& problem) const {
  const int m = static_cast<int>(problem.a.size());
  const int n = static_cast<int>(problem.c.size());
  for (const auto& row : problem.a) {
    if (static_cast<int>(row.size()) != n) throw LpError("ragged constraint matrix");
  }
  if (static_cast<int>(problem.b.size()) != m) throw LpError("rhs size mismatch");

  Tableau t;
  t.m = m;
  t.n = n;
  t.rows.assign(m, Vec(n + m, 0.0));
  t.rhs.resize(m);
  t.basis.resize(m);
  t.active.assign(m, true);
  for (int i = 0; i < m; ++i) {
    const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.rows[i][j] = sign * problem.a[i][j];
    t.rhs[i] = sign * problem.b[i];
    t.rows[i][n + i] = 1.0;
    t.basis[i] = n + i;
  }

  const long max_iter = 200L * (n + m) + 2000;

  // Phase 1: minimize the artificial sum.
  Vec phase1_cost(n + m, 0.0);
  for (int i = 0; i < m; ++i) phase1_cost[n + i] = 1.0;
  long iter = 0;
  for (;; ++iter) {
    if (iter > max_iter) throw LpError("simplex cycling guard tripped (phase 1)");
    const StepResult r = simplex_step(t, phase1_cost, n + m);
    if (r == StepResult::Optimal) break;
    if (r == StepResult::Unbounded) throw LpError("phase-1 unbounded (internal)");
  }
  double artificial_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= n) artificial_sum += t.rhs[i];
  }
  if (artificial_sum > feas_tol_ * (m + 1)) {
    return {LpStatus::Infeasible, {}, 0.0};
  }

  // Drive remaining artificials out of the basis or retire their rows.
  for (int i = 0; i < m; ++i) {
    if (!t.active[i] || t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t.rows[i][j]) > 1e-8) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.active[i] = false;  // redundant constraint
    }
  }

  // Phase 2 over the original columns only.
  Vec phase2_cost(n + m, 0.0);
  for (int j = 0; j < n; ++j) phase2_cost[j] = problem.c[j];
  for (iter = 0;; ++iter) {
    if (iter > max_iter) throw LpError("simplex cycling guard tripped (phase 2)");
    const StepResult r = simplex_step(t, phase2_cost, n);
    if (r == StepResult::Optimal) break;
    if (r == StepResult::Unbounded) return {LpStatus::Unbounded, {}, 0.0};
  }

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (t.active[i] && t.basis[i] < n) sol.x[t.basis[i]] = t.rhs[i];
  }
  sol.objective = 0.0;
  for (int j = 0; j < n; ++j) sol.objective += problem.c[j] * sol.x[j];
  return sol;
}

const LpSolver& default_lp_solver() {
  static const DenseSimplexSolver solver;
  return solver;
}

}  // namespace thermo
