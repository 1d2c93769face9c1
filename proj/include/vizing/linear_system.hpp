#ifndef VIZING_LINEAR_SYSTEM_HPP
#define VIZING_LINEAR_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "vizing/rational.hpp"

namespace viz {

/// One linear equation: sum coeffs[v] * var_v = rhs.
struct LinearEquation {
  std::map<int, Rational> coeffs;
  Rational rhs;
};

/// Affine expression over the free variables of a solved system.
struct AffineExpr {
  Rational constant;
  std::map<int, Rational> coeff;  // free variable index -> coefficient

  bool is_constant() const { return coeff.empty(); }
  Rational eval(const std::map<int, Rational>& free_values) const;
};

/// Full parametrization of the solution set of a consistent linear system:
/// the free and dependent variables partition all variables, and any
/// assignment of the free variables yields an exact solution.
struct AffineSolutionSpace {
  bool inconsistent = false;
  std::vector<int> free_vars;            // in the caller's preference order
  std::map<int, AffineExpr> dependent;   // variable -> expression over free vars

  bool is_free(int var) const;
  /// Evaluates every variable (free and dependent) from free-variable values.
  std::map<int, Rational> solve_all(const std::map<int, Rational>& free_values) const;
};

/// Exact Gauss-Jordan elimination. Among all valid pivot choices the free
/// variables are selected greedily along `free_preference` (earlier entries
/// are preferred as free parameters); this is realized by eliminating columns
/// in reversed preference order. `free_preference` must be a permutation of
/// 0..num_vars-1.
AffineSolutionSpace rref(int num_vars, const std::vector<LinearEquation>& equations,
                         const std::vector<int>& free_preference);

/// Substitutes an assignment into the equations; true iff all hold exactly.
bool satisfies(const std::vector<LinearEquation>& equations,
               const std::map<int, Rational>& values);

}  // namespace viz

#endif  // VIZING_LINEAR_SYSTEM_HPP
