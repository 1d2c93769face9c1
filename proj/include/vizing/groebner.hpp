#ifndef VIZING_GROEBNER_HPP
#define VIZING_GROEBNER_HPP

#include <vector>

#include "vizing/polynomial.hpp"

namespace viz {

/// Remainder of multivariate division of p by the basis. When several leading
/// terms divide the current term, the earliest basis element wins, so normal
/// forms are deterministic even for non-Groebner bases.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const TermOrder& ord = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord = {});

/// Buchberger completion with the product criterion, followed by
/// inter-reduction and monic normalization; returns the unique reduced
/// Groebner basis sorted by increasing leading term.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const TermOrder& ord = {});

/// True iff no monomial of any element is divisible by the leading term of
/// another element and all leading coefficients are 1.
bool is_reduced_basis(const std::vector<Polynomial>& basis, const TermOrder& ord = {});

/// Sorts a basis canonically (by leading term, then term count) for set
/// comparison; polynomials must be monic for a meaningful comparison.
std::vector<Polynomial> canonical_sort(std::vector<Polynomial> basis, const TermOrder& ord = {});

}  // namespace viz

#endif  // VIZING_GROEBNER_HPP
