#include "vizing/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace viz {

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const TermOrder& /*ord*/) {
  for (const auto& b : basis)
    if (b.is_zero()) throw std::invalid_argument("normal_form: zero basis element");

  Polynomial work = p;
  Polynomial remainder;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const Rational& lc = work.leading_coeff();
    bool reduced = false;
    for (const auto& b : basis) {
      if (!b.leading_monomial().divides(lm)) continue;
      const Monomial q = b.leading_monomial().divide_into(lm);
      work -= b.times_term(q, lc / b.leading_coeff());
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder += Polynomial(lm, lc);
      work -= Polynomial(lm, lc);
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder&) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Monomial qf = f.leading_monomial().divide_into(l);
  const Monomial qg = g.leading_monomial().divide_into(l);
  return f.times_term(qf, Rational(1) / f.leading_coeff()) -
         g.times_term(qg, Rational(1) / g.leading_coeff());
}

namespace {

// Discards elements whose leading term is divisible by another element's
// leading term (reducing them first), then reduces every tail fully.
std::vector<Polynomial> inter_reduce(std::vector<Polynomial> basis, const TermOrder& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      Polynomial g = basis[i];
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Polynomial r = normal_form(g, others, ord);
      if (r.is_zero()) {
        basis.erase(basis.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      r = r.monic();
      if (!(r == g)) {
        basis[i] = std::move(r);
        changed = true;
      }
    }
  }
  return basis;
}

}  // namespace

std::vector<Polynomial> canonical_sort(std::vector<Polynomial> basis, const TermOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    const int c = ord.cmp(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.term_count() < b.term_count();
  });
  return basis;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const TermOrder& ord) {
  std::vector<Polynomial> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return basis;

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
    const Polynomial s = s_polynomial(basis[i], basis[j], ord);
    Polynomial r = normal_form(s, basis, ord);
    if (r.is_zero()) continue;
    r = r.monic();
    for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(r));
  }

  return canonical_sort(inter_reduce(std::move(basis), ord), ord);
}

bool is_reduced_basis(const std::vector<Polynomial>& basis, const TermOrder& /*ord*/) {
  for (const auto& b : basis)
    if (b.is_zero() || b.leading_coeff() != Rational(1)) return false;
  for (size_t i = 0; i < basis.size(); ++i)
    for (const auto& [m, c] : basis[i].terms())
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        if (basis[j].leading_monomial().divides(m)) return false;
      }
  return true;
}

}  // namespace viz
