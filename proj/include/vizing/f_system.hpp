#ifndef VIZING_F_SYSTEM_HPP
#define VIZING_F_SYSTEM_HPP

#include <string>
#include <vector>

#include "vizing/linear_system.hpp"
#include "vizing/rat_matrix.hpp"
#include "vizing/rho.hpp"

namespace viz {

struct UnsupportedDError : std::domain_error {
  explicit UnsupportedDError(const std::string& what) : std::domain_error(what) {}
};

struct FTerm {
  int i, j;        // 1 <= i <= j <= m
  long long coeff; // integer (products of binomials)
};

/// One equation of the certificate system: lhs_sign*(F_{1,1}+1) = sum terms.
struct FEquation {
  int k;
  int lhs_sign;  // (-1)^k
  std::vector<FTerm> terms;
};

/// The d-1 linear equations over the symmetric matrix F (dimension
/// m = ceil(d/2)) whose rational PSD solutions are exactly the Gram matrices
/// of minimum-degree certificates; F_{0,j} is already substituted as -F_{1,j}.
struct FSystem {
  int d = 0;
  int m = 0;
  std::vector<FEquation> equations;
};

/// Builds the system for k = 2..d. Throws UnsupportedDError for d < 3.
FSystem build_f_system(int d);

// Symmetric-entry indexing shared by the solver pipeline: variables are the
// upper-triangle entries (i,j), 1 <= i <= j <= m.
int fvar_count(int m);
int fvar_index(int i, int j, int m);
std::pair<int, int> fvar_of_index(int idx, int m);
std::string fvar_name(int i, int j);
/// Parses "F_i_j" (1-based, i <= j).
std::optional<std::pair<int, int>> parse_fvar_name(const std::string& name);

/// Free-variable preference: diagonal entries by index, then off-diagonals
/// lexicographic by (i,j); as variable indices for rref.
std::vector<int> fvar_preference(int m);

/// Converts to equations over fvar indices: sum coeff*F_ij - sign*F_11 = sign.
std::vector<LinearEquation> to_linear_equations(const FSystem& fs);

/// True iff F satisfies every equation exactly.
bool satisfies_f_system(const FSystem& fs, const RatMatrix& F);

/// Extends F (m x m, indices 1..m) to indices 0..m with F_{0,0} = F_{1,1} and
/// F_{0,j} = -F_{1,j}.
RatMatrix extend_f(const RatMatrix& F);

/// Expands the quadratic form of the extended F over (rho^0,..,rho^m) in the
/// rho basis: sum_{i,j} Fext_{i,j} rho^i rho^j. A matrix F is a certificate
/// Gram matrix iff this equals certificate_target(F_{1,1}, d).
RhoPoly sos_residual(const RatMatrix& F, int d);

/// (F_{1,1}+1) * inclusion_exclusion(d) + (rho^1 - rho^0).
RhoPoly certificate_target(const Rational& f11, int d);

}  // namespace viz

#endif  // VIZING_F_SYSTEM_HPP
