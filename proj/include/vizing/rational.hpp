#ifndef VIZING_RATIONAL_HPP
#define VIZING_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace viz {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Canonical zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Exact conversion of a finite double (doubles are dyadic rationals).
  /// Throws std::invalid_argument on NaN or infinity.
  static Rational from_double(double x);

  /// Parses "p/q" or "p" with optional sign. Returns nullopt on malformed
  /// input or zero denominator.
  static std::optional<Rational> parse(std::string_view s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r(*this); r.v_ = -r.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
/// Largest integer <= r, as an exact integer-valued rational.
Rational floor(const Rational& r);
/// Smallest integer >= r.
Rational ceil(const Rational& r);
mpz_class floor_z(const Rational& r);
mpz_class ceil_z(const Rational& r);

}  // namespace viz

#endif  // VIZING_RATIONAL_HPP
