#include "vizing/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace viz {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
  Rational r;
  r.v_ = mpq_class(x);  // exact: doubles are dyadic
  return r;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rational(mpz_class(std::string(s)), mpz_class(1));
  }
  std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) return std::nullopt;
  mpz_class den{std::string(ds)};
  if (den == 0) return std::nullopt;
  return Rational(mpz_class(std::string(ns)), den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

mpz_class floor_z(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

mpz_class ceil_z(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rational floor(const Rational& r) { return Rational(floor_z(r), mpz_class(1)); }
Rational ceil(const Rational& r) { return Rational(ceil_z(r), mpz_class(1)); }

}  // namespace viz
