#ifndef VIZING_IDEAL_HPP
#define VIZING_IDEAL_HPP

#include <vector>

#include "vizing/polynomial.hpp"

namespace viz {

/// Vertices of the cross T_gh = row g union column h, including (g,h) itself;
/// |T_gh| = n_g + n_h - 1.
std::vector<std::pair<int, int>> cross_set(const ClassParams& p, int g, int h);

/// The subsets of T_gh that split the degree-d basis elements: U^r is the row
/// part excluding the dominator column h=1 and h itself (empty when h=1), U^c
/// the column part excluding the dominator row (empty when g=1). ubar is
/// T_gh minus both.
struct USets {
  std::vector<int> u_row;                    // h' values: (g,h') in U^r
  std::vector<int> u_col;                    // g' values: (g',h) in U^c
  std::vector<std::pair<int, int>> ubar;     // vertices of T_gh outside U
  size_t u_size() const { return u_row.size() + u_col.size(); }
};
USets u_sets(const ClassParams& p, int g, int h);

/// Generators of the Vizing ideal (graph-class ideals for both factors, then
/// the product ideal), for domination number 1 on each factor: edge booleans,
/// dominator-adjacency constraints in simplified form 1 - e_{1g}, vertex
/// booleans, and the domination products.
std::vector<Polynomial> build_generators(const ClassParams& p);

/// sum of all x_{gh} minus 1.
Polynomial build_fviz(const ClassParams& p);

/// The reduced Groebner basis in closed form: the dominator edge linears, the
/// edge and vertex booleans, and for every vertex (g,h) and every M subseteq
/// U_gh the degree-d element
///   b_{gh,M} = prod_{ubar union M} (x - 1) * prod_{U \ M} (e - 1),
/// where the edge variable of a row vertex (g,h') is e_{hh'} and of a column
/// vertex (g',h) is e_{gg'}. Elements are emitted linears first, then
/// quadratics, then b_{gh,M} by (g,h) and by M as a bitmask; all monic.
/// Throws std::invalid_argument when n_g + n_h > 16.
std::vector<Polynomial> closed_form_gb(const ClassParams& p);

/// The single basis element b_{gh,M}; mask selects M as a bitmask over the
/// concatenation u_row then u_col.
Polynomial gb_element(const ClassParams& p, int g, int h, unsigned mask);

}  // namespace viz

#endif  // VIZING_IDEAL_HPP
