#include "vizing/rho.hpp"

#include <array>
#include <stdexcept>

#include "vizing/ideal.hpp"

namespace viz {

namespace {

constexpr int kMaxBinom = 64;

const std::array<std::array<unsigned long long, kMaxBinom + 1>, kMaxBinom + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<unsigned long long, kMaxBinom + 1>, kMaxBinom + 1> t{};
    for (int n = 0; n <= kMaxBinom; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

Rational binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  if (n > kMaxBinom) throw std::invalid_argument("binom: n exceeds Pascal cache");
  return Rational(static_cast<long>(pascal()[n][k]));
}

RhoPoly::RhoPoly(int d_, std::vector<Rational> c) : d(d_), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != d + 1)
    throw std::invalid_argument("RhoPoly: coefficient length must be d+1");
}

RhoPoly RhoPoly::unit(int d, int i) {
  RhoPoly r(d);
  r.coeffs.at(i) = Rational(1);
  return r;
}

RhoPoly rho_mul(const RhoPoly& a, const RhoPoly& b) {
  if (a.d != b.d) throw std::invalid_argument("rho_mul: dimension mismatch");
  const int d = a.d;
  RhoPoly out(d);
  for (int i = 0; i <= d; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; j <= d; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      const Rational c = a.coeffs[i] * b.coeffs[j];
      const int lo = std::min(i, j), hi = std::max(i, j);
      if (lo == 0) {  // rho^0 is the scalar 1
        out.coeffs[hi] += c;
        continue;
      }
      for (int r = 0; r <= std::min(lo, d - hi); ++r)
        out.coeffs[hi + r] += c * binom(lo, r) * binom(hi + r, lo);
    }
  }
  return out;
}

RhoPoly inclusion_exclusion(int d) {
  if (d < 0) throw std::invalid_argument("inclusion_exclusion: d must be >= 0");
  RhoPoly r(d);
  for (int i = 0; i <= d; ++i) r.coeffs[i] = Rational(i % 2 == 0 ? 1 : -1);
  return r;
}

RhoPoly square_row(const std::vector<Rational>& c, int d) {
  const int m = (d + 1) / 2;
  if (static_cast<int>(c.size()) != m + 1)
    throw std::invalid_argument("square_row: need coefficients 0..ceil(d/2)");
  RhoPoly out(d);
  for (int k = 0; k <= d; ++k) {
    Rational s;
    for (int i = (k + 1) / 2; i <= std::min(k, m); ++i)
      s += c[i] * c[i] * binom(i, k - i) * binom(k, i);
    Rational cross;
    for (int j = (k + 2) / 2; j <= std::min(k, m); ++j)
      for (int i = k - j; i <= j - 1; ++i)
        cross += c[i] * c[j] * binom(i, k - j) * binom(k, i);
    out.coeffs[k] = s + cross + cross;
  }
  return out;
}

Rational eval_rho_point(int i, int t) { return binom(t, i); }

Polynomial lift_rho(const RhoPoly& r, const ClassParams& p, int g, int h) {
  if (r.d != p.d()) throw std::invalid_argument("lift_rho: cross size mismatch");
  const auto cross = cross_set(p, g, h);
  const int d = r.d;
  Polynomial out;
  // For each i with a nonzero coefficient, add coeff * (sum of i-subsets).
  for (int i = 0; i <= d; ++i) {
    if (r.coeffs[i].is_zero()) continue;
    std::vector<int> idx(i);
    for (int k = 0; k < i; ++k) idx[k] = k;
    while (true) {
      Monomial m;
      for (int k = 0; k < i; ++k)
        m = m * Monomial(VarId::vertex(cross[idx[k]].first, cross[idx[k]].second));
      out += Polynomial(m, r.coeffs[i]);
      int k = i - 1;
      while (k >= 0 && idx[k] == d - i + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int l = k + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return out;
}

}  // namespace viz
