#ifndef VIZING_RHO_HPP
#define VIZING_RHO_HPP

#include <vector>

#include "vizing/polynomial.hpp"
#include "vizing/rational.hpp"

namespace viz {

/// Binomial coefficient from a Pascal cache (n <= 64); 0 outside range.
Rational binom(int n, int k);

/// Element of the span of rho^0..rho^d for a fixed cross size d: rho^i is the
/// sum of all i-subsets of the d vertex variables of the cross. The algebra
/// depends only on d; the anchor enters when lifting to a Polynomial.
struct RhoPoly {
  int d = 0;
  std::vector<Rational> coeffs;  // length d+1, index i = coefficient of rho^i

  RhoPoly() = default;
  explicit RhoPoly(int d_) : d(d_), coeffs(d_ + 1) {}
  RhoPoly(int d_, std::vector<Rational> c);

  static RhoPoly unit(int d, int i);

  bool operator==(const RhoPoly& o) const { return d == o.d && coeffs == o.coeffs; }
};

/// Product in the quotient algebra: rho^i rho^j reduces to
/// sum_{r=0}^{min(i, d-j)} C(i,r) C(j+r,i) rho^{j+r} (for i <= j), extended
/// bilinearly; rho^0 multiplies as the scalar 1. Throws on mismatched d.
RhoPoly rho_mul(const RhoPoly& a, const RhoPoly& b);

/// prod over the cross of (1 - x)  =  sum_i (-1)^i rho^i.
RhoPoly inclusion_exclusion(int d);

/// Expansion of (sum_{i=0}^{m} c_i rho^i)^2 via the closed form
///   coeff(rho^k) = sum_{i=ceil(k/2)}^{min(k,m)} c_i^2 C(i,k-i) C(k,i)
///               + 2 sum_{j=ceil((k+1)/2)}^{min(k,m)} sum_{i=k-j}^{j-1}
///                     c_i c_j C(i,k-j) C(k,i),
/// where m = ceil(d/2). Must agree with the bilinear rho_mul route.
RhoPoly square_row(const std::vector<Rational>& c, int d);

/// Value of rho^i at a 0/1 point with t active variables in the cross: C(t,i).
Rational eval_rho_point(int i, int t);

/// Lifts to the plain polynomial ring at anchor (g,h): rho^i becomes the sum
/// of all i-subsets of the cross variables.
Polynomial lift_rho(const RhoPoly& r, const ClassParams& p, int g, int h);

}  // namespace viz

#endif  // VIZING_RHO_HPP
