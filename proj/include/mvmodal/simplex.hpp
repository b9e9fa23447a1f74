#pragma once

#include <vector>

#include "mvmodal/rational.hpp"

namespace mvmodal {

enum class Rel { Le, Ge, Eq };

struct LinTerm {
  int var;
  Rational coeff;
};

struct LinearConstraint {
  std::vector<LinTerm> terms;
  Rel rel = Rel::Le;
  Rational rhs = 0;
};

/// maximize objective . x  subject to rows, x >= 0. Upper bounds are
/// ordinary rows. All arithmetic exact.
struct LpProblem {
  int num_vars = 0;
  std::vector<LinearConstraint> rows;
  std::vector<Rational> objective;  // size num_vars
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> point;
};

/// Two-phase primal simplex with Bland's rule; deterministic for a fixed
/// problem layout (entering = smallest eligible column, leaving = smallest
/// basic index among minimal ratios).
LpSolution solve_lp(const LpProblem& problem);

}  // namespace mvmodal
