#pragma once

#include <string>
#include <vector>

#include "thermo/core.hpp"

namespace thermo {

/// min c.x  subject to  A x = b,  x >= 0.
struct LpProblem {
  Mat a;
  Vec b;
  Vec c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, Failure };

struct LpSolution {
  LpStatus status = LpStatus::Failure;
  Vec x;
  double objective = 0.0;
};

/// Surfaced when a solver breaks down (cycling guard, numerical loss); this
/// is distinct from a clean Infeasible/Unbounded verdict.
struct LpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Abstract solver interface so an external LP can be plugged in; the bundled
/// implementation is a dense two-phase primal simplex with Bland's rule.
class LpSolver {
 public:
  virtual ~LpSolver() = default;
  virtual LpSolution solve(const LpProblem& problem) const = 0;
};

class DenseSimplexSolver final : public LpSolver {
 public:
  explicit DenseSimplexSolver(double feas_tol = 1e-9) : feas_tol_(feas_tol) {}
  LpSolution solve(const LpProblem& problem) const override;

 private:
  LpSolution solve_once(const LpProblem& problem) const;

 private:
  double feas_tol_;
};

/// Process-wide default solver (the bundled simplex unless replaced).
const LpSolver& default_lp_solver();

}  // namespace thermo
