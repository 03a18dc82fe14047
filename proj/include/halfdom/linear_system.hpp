#pragma once

#include <string>
#include <utility>
#include <vector>

#include "halfdom/rational.hpp"

namespace halfdom {

/// Sparse row: sum of coefficient * x[var] <= rhs.
struct LinearRow {
  std::vector<std::pair<int, Rational>> terms;
  Rational rhs;
  std::string label;
};

/// Inequality system over variables boxed to [0, 1].
struct LinearSystem {
  int variables = 0;
  std::vector<LinearRow> rows;
  bool integral = false;

  /// Throws std::invalid_argument when a term references a missing variable.
  void validate() const;
  [[nodiscard]] bool satisfied_by(const std::vector<Rational>& x) const;
};

struct LpSolution {
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> duals;  // one per row, all >= 0
  long pivots = 0;
};

/// Exact optimum of max objective.x subject to the system and 0 <= x <= 1
/// (integrality flags are ignored). The result is certified before
/// returning: the primal point is checked row by row and the dual
/// multipliers must reproduce the same value through the weak-duality bound
/// b.y + sum_j max(0, c_j - (A^T y)_j). Throws std::runtime_error if either
/// check fails, and std::invalid_argument if a row has a negative right-hand
/// side (the method starts from x = 0).
LpSolution lp_optimum(const LinearSystem& system, const std::vector<Rational>& objective);

/// Weak-duality bound for any y >= 0 over the unit box.
Rational dual_bound(const LinearSystem& system, const std::vector<Rational>& objective,
                    const std::vector<Rational>& duals);

}  // namespace halfdom
