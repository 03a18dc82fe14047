#include "halfdom/linear_system.hpp"

#include <stdexcept>
#include <string>

#include "simplex.hpp"

namespace halfdom {

void LinearSystem::validate() const {
  if (variables < 0) throw std::invalid_argument("negative variable count");
  for (const auto& row : rows) {
    for (const auto& [var, coeff] : row.terms) {
      if (var < 0 || var >= variables) {
        throw std::invalid_argument("row '" + row.label + "' references variable " + std::to_string(var) +
                                    " outside 0.." + std::to_string(variables - 1));
      }
    }
  }
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != variables) return false;
  for (const auto& v : x) {
    if (v < Rational(0) || v > Rational(1)) return false;
  }
  for (const auto& row : rows) {
    Rational lhs;
    for (const auto& [var, coeff] : row.terms) lhs += coeff * x[static_cast<std::size_t>(var)];
    if (lhs > row.rhs) return false;
  }
  return true;
}

Rational dual_bound(const LinearSystem& system, const std::vector<Rational>& objective,
                    const std::vector<Rational>& duals) {
  if (duals.size() != system.rows.size()) throw std::invalid_argument("one multiplier per row is required");
  if (static_cast<int>(objective.size()) != system.variables) {
    throw std::invalid_argument("objective length differs from the variable count");
  }
  std::vector<Rational> reduced = objective;
  Rational bound;
  for (std::size_t r = 0; r < duals.size(); ++r) {
    const Rational& y = duals[r];
    if (y.sign() < 0) throw std::invalid_argument("row multipliers must be non-negative");
    if (y.is_zero()) continue;
    bound += y * system.rows[r].rhs;
    for (const auto& [var, coeff] : system.rows[r].terms) reduced[static_cast<std::size_t>(var)] -= y * coeff;
  }
  for (const auto& rc : reduced) {
    if (rc.sign() > 0) bound += rc;
  }
  return bound;
}

LpSolution lp_optimum(const LinearSystem& system, const std::vector<Rational>& objective) {
  system.validate();
  if (static_cast<int>(objective.size()) != system.variables) {
    throw std::invalid_argument("objective length differs from the variable count");
  }
  detail::SimplexProblem<Rational> problem;
  problem.rows = static_cast<int>(system.rows.size());
  problem.cols = system.variables;
  problem.a.assign(static_cast<std::size_t>(problem.rows) * static_cast<std::size_t>(problem.cols), Rational(0));
  for (int r = 0; r < problem.rows; ++r) {
    const auto& row = system.rows[static_cast<std::size_t>(r)];
    if (row.rhs.sign() < 0) {
      throw std::invalid_argument("row '" + row.label + "' has a negative right-hand side; x = 0 must be feasible");
    }
    for (const auto& [var, coeff] : row.terms) {
      problem.a[static_cast<std::size_t>(r) * static_cast<std::size_t>(problem.cols) + static_cast<std::size_t>(var)] +=
          coeff;
    }
    problem.b.push_back(row.rhs);
  }
  problem.c = objective;
  problem.upper.assign(static_cast<std::size_t>(problem.cols), Rational(1));

  auto result = detail::solve_bounded(problem, Rational(0));
  if (!result.optimal) throw std::runtime_error("simplex did not reach an optimal basis");

  LpSolution out;
  out.primal = std::move(result.x);
  out.duals = std::move(result.y);
  out.pivots = result.pivots;
  for (int j = 0; j < system.variables; ++j) {
    out.value += objective[static_cast<std::size_t>(j)] * out.primal[static_cast<std::size_t>(j)];
  }
  if (!system.satisfied_by(out.primal)) throw std::runtime_error("LP certificate failed: primal point infeasible");
  for (const auto& y : out.duals) {
    if (y.sign() < 0) throw std::runtime_error("LP certificate failed: negative multiplier");
  }
  if (dual_bound(system, objective, out.duals) != out.value) {
    throw std::runtime_error("LP certificate failed: dual bound differs from primal value");
  }
  return out;
}

}  // namespace halfdom
