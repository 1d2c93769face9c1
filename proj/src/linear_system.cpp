#include "vizing/linear_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace viz {

Rational AffineExpr::eval(const std::map<int, Rational>& free_values) const {
  Rational v = constant;
  for (const auto& [var, c] : coeff) {
    auto it = free_values.find(var);
    if (it == free_values.end()) throw std::invalid_argument("AffineExpr: missing free value");
    v += c * it->second;
  }
  return v;
}

bool AffineSolutionSpace::is_free(int var) const {
  return std::find(free_vars.begin(), free_vars.end(), var) != free_vars.end();
}

std::map<int, Rational> AffineSolutionSpace::solve_all(
    const std::map<int, Rational>& free_values) const {
  std::map<int, Rational> out;
  for (int v : free_vars) {
    auto it = free_values.find(v);
    if (it == free_values.end()) throw std::invalid_argument("solve_all: missing free value");
    out[v] = it->second;
  }
  for (const auto& [v, expr] : dependent) out[v] = expr.eval(free_values);
  return out;
}

AffineSolutionSpace rref(int num_vars, const std::vector<LinearEquation>& equations,
                         const std::vector<int>& free_preference) {
  if (static_cast<int>(free_preference.size()) != num_vars)
    throw std::invalid_argument("rref: free_preference must cover all variables");

  const size_t nrows = equations.size();
  std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(num_vars));
  std::vector<Rational> b(nrows);
  for (size_t r = 0; r < nrows; ++r) {
    for (const auto& [v, c] : equations[r].coeffs) {
      if (v < 0 || v >= num_vars) throw std::invalid_argument("rref: variable out of range");
      A[r][v] = c;
    }
    b[r] = equations[r].rhs;
  }

  // Eliminating the least-preferred columns first leaves the most-preferred
  // variables free whenever the rank allows it.
  std::vector<int> col_order(free_preference.rbegin(), free_preference.rend());

  std::vector<int> pivot_row_of(num_vars, -1);
  size_t rank = 0;
  for (int c : col_order) {
    size_t pr = rank;
    while (pr < nrows && A[pr][c].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(A[rank], A[pr]);
    std::swap(b[rank], b[pr]);
    const Rational inv = Rational(1) / A[rank][c];
    for (auto& x : A[rank]) x *= inv;
    b[rank] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == rank || A[r][c].is_zero()) continue;
      const Rational f = A[r][c];
      for (int v = 0; v < num_vars; ++v)
        if (!A[rank][v].is_zero()) A[r][v] -= f * A[rank][v];
      b[r] -= f * b[rank];
    }
    pivot_row_of[c] = static_cast<int>(rank);
    ++rank;
  }

  AffineSolutionSpace out;
  for (size_t r = rank; r < nrows; ++r)
    if (!b[r].is_zero()) {
      out.inconsistent = true;
      return out;
    }

  for (int v : free_preference)
    if (pivot_row_of[v] < 0) out.free_vars.push_back(v);

  for (int v = 0; v < num_vars; ++v) {
    const int r = pivot_row_of[v];
    if (r < 0) continue;
    AffineExpr e;
    e.constant = b[r];
    for (int f : out.free_vars)
      if (!A[r][f].is_zero()) e.coeff[f] = -A[r][f];
    out.dependent[v] = std::move(e);
  }
  return out;
}

bool satisfies(const std::vector<LinearEquation>& equations,
               const std::map<int, Rational>& values) {
  for (const auto& eq : equations) {
    Rational lhs;
    for (const auto& [v, c] : eq.coeffs) {
      auto it = values.find(v);
      if (it == values.end()) return false;
      lhs += c * it->second;
    }
    if (lhs != eq.rhs) return false;
  }
  return true;
}

}  // namespace viz
