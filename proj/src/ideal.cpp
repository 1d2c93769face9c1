#include "vizing/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace viz {

namespace {

Polynomial one_minus(VarId v) { return Polynomial(Rational(1)) - Polynomial::variable(v); }

Polynomial boolean_gen(VarId v) {  // v*(v-1) = v^2 - v
  return Polynomial(Monomial(v, 2)) - Polynomial(Monomial(v));
}

}  // namespace

std::vector<std::pair<int, int>> cross_set(const ClassParams& p, int g, int h) {
  std::vector<std::pair<int, int>> t;
  t.reserve(p.d());
  for (int h2 = 1; h2 <= p.n_h; ++h2) t.emplace_back(g, h2);
  for (int g2 = 1; g2 <= p.n_g; ++g2)
    if (g2 != g) t.emplace_back(g2, h);
  return t;
}

USets u_sets(const ClassParams& p, int g, int h) {
  USets u;
  if (h != 1)
    for (int h2 = 1; h2 <= p.n_h; ++h2)
      if (h2 != 1 && h2 != h) u.u_row.push_back(h2);
  if (g != 1)
    for (int g2 = 1; g2 <= p.n_g; ++g2)
      if (g2 != 1 && g2 != g) u.u_col.push_back(g2);
  for (const auto& [g2, h2] : cross_set(p, g, h)) {
    const bool in_row = g2 == g && h2 != h &&
                        std::find(u.u_row.begin(), u.u_row.end(), h2) != u.u_row.end();
    const bool in_col = h2 == h && g2 != g &&
                        std::find(u.u_col.begin(), u.u_col.end(), g2) != u.u_col.end();
    if (!in_row && !in_col) u.ubar.emplace_back(g2, h2);
  }
  return u;
}

std::vector<Polynomial> build_generators(const ClassParams& p) {
  std::vector<Polynomial> gens;
  // I_G: edge booleans, then the simplified dominator constraints.
  for (int g = 1; g <= p.n_g; ++g)
    for (int g2 = g + 1; g2 <= p.n_g; ++g2) gens.push_back(boolean_gen(VarId::edge_g(g, g2)));
  for (int g = 2; g <= p.n_g; ++g) gens.push_back(one_minus(VarId::edge_g(1, g)));
  // I_H likewise.
  for (int h = 1; h <= p.n_h; ++h)
    for (int h2 = h + 1; h2 <= p.n_h; ++h2) gens.push_back(boolean_gen(VarId::edge_h(h, h2)));
  for (int h = 2; h <= p.n_h; ++h) gens.push_back(one_minus(VarId::edge_h(1, h)));
  // Product ideal: vertex booleans, then the domination products.
  for (int g = 1; g <= p.n_g; ++g)
    for (int h = 1; h <= p.n_h; ++h) gens.push_back(boolean_gen(VarId::vertex(g, h)));
  for (int g = 1; g <= p.n_g; ++g)
    for (int h = 1; h <= p.n_h; ++h) {
      Polynomial prod = one_minus(VarId::vertex(g, h));
      for (int g2 = 1; g2 <= p.n_g; ++g2) {
        if (g2 == g) continue;
        prod = prod * (Polynomial(Rational(1)) -
                       Polynomial(Monomial(VarId::edge_g(g, g2)) * Monomial(VarId::vertex(g2, h))));
      }
      for (int h2 = 1; h2 <= p.n_h; ++h2) {
        if (h2 == h) continue;
        prod = prod * (Polynomial(Rational(1)) -
                       Polynomial(Monomial(VarId::edge_h(h, h2)) * Monomial(VarId::vertex(g, h2))));
      }
      gens.push_back(std::move(prod));
    }
  return gens;
}

Polynomial build_fviz(const ClassParams& p) {
  Polynomial f;
  for (int g = 1; g <= p.n_g; ++g)
    for (int h = 1; h <= p.n_h; ++h) f += Polynomial::variable(VarId::vertex(g, h));
  return f - Polynomial(Rational(1));
}

Polynomial gb_element(const ClassParams& p, int g, int h, unsigned mask) {
  const USets u = u_sets(p, g, h);
  if (mask >= (1u << u.u_size())) throw std::invalid_argument("gb_element: mask out of range");
  Polynomial b(Rational(1));
  for (const auto& [g2, h2] : u.ubar)
    b = b * (Polynomial::variable(VarId::vertex(g2, h2)) - Polynomial(Rational(1)));
  for (size_t i = 0; i < u.u_row.size(); ++i) {
    const int h2 = u.u_row[i];
    if (mask & (1u << i))
      b = b * (Polynomial::variable(VarId::vertex(g, h2)) - Polynomial(Rational(1)));
    else
      b = b * (Polynomial::variable(VarId::edge_h(h, h2)) - Polynomial(Rational(1)));
  }
  for (size_t i = 0; i < u.u_col.size(); ++i) {
    const int g2 = u.u_col[i];
    if (mask & (1u << (u.u_row.size() + i)))
      b = b * (Polynomial::variable(VarId::vertex(g2, h)) - Polynomial(Rational(1)));
    else
      b = b * (Polynomial::variable(VarId::edge_g(g, g2)) - Polynomial(Rational(1)));
  }
  return b;
}

std::vector<Polynomial> closed_form_gb(const ClassParams& p) {
  if (p.n_g + p.n_h > 16)
    throw std::invalid_argument("closed_form_gb: refusing n_g + n_h > 16");
  std::vector<Polynomial> basis;
  for (int g = 2; g <= p.n_g; ++g)
    basis.push_back(Polynomial::variable(VarId::edge_g(1, g)) - Polynomial(Rational(1)));
  for (int h = 2; h <= p.n_h; ++h)
    basis.push_back(Polynomial::variable(VarId::edge_h(1, h)) - Polynomial(Rational(1)));
  for (int g = 2; g <= p.n_g; ++g)
    for (int g2 = g + 1; g2 <= p.n_g; ++g2) basis.push_back(boolean_gen(VarId::edge_g(g, g2)));
  for (int h = 2; h <= p.n_h; ++h)
    for (int h2 = h + 1; h2 <= p.n_h; ++h2) basis.push_back(boolean_gen(VarId::edge_h(h, h2)));
  for (int g = 1; g <= p.n_g; ++g)
    for (int h = 1; h <= p.n_h; ++h) basis.push_back(boolean_gen(VarId::vertex(g, h)));
  for (int g = 1; g <= p.n_g; ++g)
    for (int h = 1; h <= p.n_h; ++h) {
      const USets u = u_sets(p, g, h);
      for (unsigned mask = 0; mask < (1u << u.u_size()); ++mask) {
        Polynomial b = gb_element(p, g, h, mask);
        // Vertices of a 1-vertex factor share their cross with the dominator
        // row, so degenerate shapes can repeat an element verbatim.
        if (std::find(basis.begin(), basis.end(), b) == basis.end())
          basis.push_back(std::move(b));
      }
    }
  return basis;
}

}  // namespace viz
