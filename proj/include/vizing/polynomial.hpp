#ifndef VIZING_POLYNOMIAL_HPP
#define VIZING_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vizing/rational.hpp"
#include "vizing/vars.hpp"

namespace viz {

/// Power product with positive exponents, factors sorted by variable code.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int exp = 1);
  static Monomial one() { return Monomial(); }

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Quotient o / this; caller guarantees divisibility.
  Monomial divide_into(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  std::string str() const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

 private:
  friend struct TermOrder;
  std::vector<std::pair<VarId, int>> factors_;
};

/// Total-degree lexicographic order. Degrees compare first; ties compare the
/// exponent vectors lexicographically along the variable priority, which runs
/// Vertex variables before EdgeG before EdgeH, each block by indices.
struct TermOrder {
  /// <0 if a < b, 0 if equal, >0 if a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

/// Multivariate polynomial over the rationals; terms kept sorted in
/// decreasing term order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Rational c);
  explicit Polynomial(const Monomial& m, Rational c = Rational(1));
  static Polynomial variable(VarId v) { return Polynomial(Monomial(v)); }
  static Polynomial constant(Rational c) { return Polynomial(std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  int degree() const { return is_zero() ? -1 : terms_.front().first.degree(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;
  Rational coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;

  /// Substitutes 0/1 values for every variable via the callback.
  template <typename ValueFn>  // bool(VarId)
  Rational eval01(ValueFn value) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
      bool alive = true;
      for (const auto& [v, e] : m.factors())
        if (!value(v)) {
          alive = false;
          break;
        }
      if (alive) sum += c;
    }
    return sum;
  }

  std::string str() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  void normalize();
  std::vector<Term> terms_;
};

}  // namespace viz

#endif  // VIZING_POLYNOMIAL_HPP
