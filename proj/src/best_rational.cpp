#include "vizing/best_rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace viz {

namespace {

// Minimal-|numerator| integer of [a, b], assuming one exists.
Rational best_integer(const mpz_class& lo, const mpz_class& hi) {
  if (lo <= 0 && 0 <= hi) return Rational(mpz_class(0), mpz_class(1));
  return Rational(lo > 0 ? lo : hi, mpz_class(1));
}

}  // namespace

Rational simplest_in_interval(const Rational& a, const Rational& b) {
  if (b < a) throw EmptyIntervalError{};
  if (a == b) return a;
  const mpz_class clo = ceil_z(a), chi = floor_z(b);
  if (clo <= chi) return best_integer(clo, chi);
  // No integer inside: a and b share their floor n, and within (n, n+1) the
  // minimal-denominator rational is unique, reached by continued-fraction
  // descent on the reciprocal of the fractional parts.
  const Rational n = floor(a);
  const Rational f = simplest_in_interval(Rational(1) / (b - n), Rational(1) / (a - n));
  return n + Rational(1) / f;
}

Rational best_rational_in_interval(double lo, double hi, const Rational& margin) {
  if (hi < lo) throw EmptyIntervalError{};
  if (margin.sign() < 0 || margin >= Rational(1, 2))
    throw std::invalid_argument("best_rational_in_interval: margin must be in [0, 1/2)");
  const Rational a = Rational::from_double(lo);
  const Rational b = Rational::from_double(hi);
  const Rational pad = margin * (b - a);
  return simplest_in_interval(a + pad, b - pad);
}

RationalIntervalEnumerator::RationalIntervalEnumerator(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)), q_(0) {
  if (hi_ < lo_) throw EmptyIntervalError{};
}

void RationalIntervalEnumerator::refill() {
  batch_.clear();
  pos_ = 0;
  const Rational q_rat(q_, mpz_class(1));
  const mpz_class plo = ceil_z(lo_ * q_rat);
  const mpz_class phi = floor_z(hi_ * q_rat);
  for (mpz_class p = plo; p <= phi; ++p) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q_.get_mpz_t());
    if (g == 1) batch_.emplace_back(p, q_);
  }
  std::sort(batch_.begin(), batch_.end(), [](const Rational& x, const Rational& y) {
    const mpz_class ax = ::abs(x.num()), ay = ::abs(y.num());
    if (ax != ay) return ax < ay;
    return x < y;
  });
}

std::optional<Rational> RationalIntervalEnumerator::next(const mpz_class& max_den) {
  while (pos_ >= batch_.size()) {
    ++q_;
    if (q_ > max_den) return std::nullopt;
    refill();
  }
  return batch_[pos_++];
}

}  // namespace viz
