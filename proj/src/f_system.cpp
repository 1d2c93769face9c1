#include "vizing/f_system.hpp"

#include <map>

namespace viz {

FSystem build_f_system(int d) {
  if (d < 3) throw UnsupportedDError("build_f_system: d must be >= 3");
  FSystem fs;
  fs.d = d;
  fs.m = (d + 1) / 2;
  const int m = fs.m;
  for (int k = 2; k <= d; ++k) {
    std::map<std::pair<int, int>, long long> coeff;
    for (int i = (k + 1) / 2; i <= std::min(k, m); ++i) {
      const long long c = binom(i, k - i).num().get_si() * binom(k, i).num().get_si();
      coeff[{i, i}] += c;
    }
    for (int j = (k + 2) / 2; j <= std::min(k, m); ++j)
      for (int i = k - j; i <= j - 1; ++i) {
        const long long c = 2 * binom(i, k - j).num().get_si() * binom(k, i).num().get_si();
        if (i == 0)
          coeff[{1, j}] -= c;  // F_{0,j} = -F_{1,j}
        else
          coeff[{std::min(i, j), std::max(i, j)}] += c;
      }
    FEquation eq;
    eq.k = k;
    eq.lhs_sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [ij, c] : coeff)
      if (c != 0) eq.terms.push_back({ij.first, ij.second, c});
    fs.equations.push_back(std::move(eq));
  }
  return fs;
}

int fvar_count(int m) { return m * (m + 1) / 2; }

int fvar_index(int i, int j, int m) {
  if (i < 1 || j < i || j > m) throw std::invalid_argument("fvar_index: bad entry");
  // row-major upper triangle: (1,1),(1,2),...,(1,m),(2,2),...
  // row r holds m - r + 1 entries, so row i starts at (i-1)(m+1) - i(i-1)/2.
  return (i - 1) * (m + 1) - i * (i - 1) / 2 + (j - i);
}

std::pair<int, int> fvar_of_index(int idx, int m) {
  for (int i = 1; i <= m; ++i) {
    const int row = m - i + 1;
    if (idx < row) return {i, i + idx};
    idx -= row;
  }
  throw std::invalid_argument("fvar_of_index: out of range");
}

std::string fvar_name(int i, int j) {
  return "F_" + std::to_string(i) + "_" + std::to_string(j);
}

std::optional<std::pair<int, int>> parse_fvar_name(const std::string& name) {
  if (name.size() < 5 || name[0] != 'F' || name[1] != '_') return std::nullopt;
  const auto second = name.find('_', 2);
  if (second == std::string::npos || second + 1 >= name.size()) return std::nullopt;
  try {
    size_t used = 0;
    const int i = std::stoi(name.substr(2, second - 2), &used);
    if (used != second - 2) return std::nullopt;
    const int j = std::stoi(name.substr(second + 1), &used);
    if (used != name.size() - second - 1) return std::nullopt;
    if (i < 1 || j < i) return std::nullopt;
    return std::make_pair(i, j);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<int> fvar_preference(int m) {
  std::vector<int> pref;
  pref.reserve(fvar_count(m));
  for (int i = 1; i <= m; ++i) pref.push_back(fvar_index(i, i, m));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) pref.push_back(fvar_index(i, j, m));
  return pref;
}

std::vector<LinearEquation> to_linear_equations(const FSystem& fs) {
  std::vector<LinearEquation> eqs;
  eqs.reserve(fs.equations.size());
  for (const auto& e : fs.equations) {
    LinearEquation le;
    for (const auto& t : e.terms)
      le.coeffs[fvar_index(t.i, t.j, fs.m)] += Rational(t.coeff);
    le.coeffs[fvar_index(1, 1, fs.m)] -= Rational(e.lhs_sign);
    le.rhs = Rational(e.lhs_sign);
    if (le.coeffs[fvar_index(1, 1, fs.m)].is_zero())
      le.coeffs.erase(fvar_index(1, 1, fs.m));
    eqs.push_back(std::move(le));
  }
  return eqs;
}

bool satisfies_f_system(const FSystem& fs, const RatMatrix& F) {
  if (F.rows() != static_cast<size_t>(fs.m) || !F.is_symmetric()) return false;
  for (const auto& e : fs.equations) {
    Rational rhs;
    for (const auto& t : e.terms) rhs += Rational(t.coeff) * F.at(t.i - 1, t.j - 1);
    const Rational lhs = Rational(e.lhs_sign) * (F.at(0, 0) + Rational(1));
    if (lhs != rhs) return false;
  }
  return true;
}

RatMatrix extend_f(const RatMatrix& F) {
  const size_t m = F.rows();
  RatMatrix ext(m + 1, m + 1);
  ext.at(0, 0) = F.at(0, 0);
  for (size_t j = 1; j <= m; ++j) {
    ext.at(0, j) = -F.at(0, j - 1);
    ext.at(j, 0) = ext.at(0, j);
  }
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = 1; j <= m; ++j) ext.at(i, j) = F.at(i - 1, j - 1);
  return ext;
}

RhoPoly sos_residual(const RatMatrix& F, int d) {
  const int m = (d + 1) / 2;
  if (F.rows() != static_cast<size_t>(m) || !F.is_symmetric())
    throw std::invalid_argument("sos_residual: F must be symmetric ceil(d/2) x ceil(d/2)");
  const RatMatrix ext = extend_f(F);
  RhoPoly out(d);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      if (ext.at(i, j).is_zero()) continue;
      RhoPoly prod = rho_mul(RhoPoly::unit(d, i), RhoPoly::unit(d, j));
      for (int k = 0; k <= d; ++k) out.coeffs[k] += ext.at(i, j) * prod.coeffs[k];
    }
  return out;
}

RhoPoly certificate_target(const Rational& f11, int d) {
  RhoPoly t = inclusion_exclusion(d);
  const Rational s = f11 + Rational(1);
  for (auto& c : t.coeffs) c *= s;
  t.coeffs[0] -= Rational(1);
  t.coeffs[1] += Rational(1);
  return t;
}

}  // namespace viz
