#ifndef VIZING_BEST_RATIONAL_HPP
#define VIZING_BEST_RATIONAL_HPP

#include <optional>

#include "vizing/rational.hpp"

namespace viz {

/// Thrown when hi < lo.
struct EmptyIntervalError : std::domain_error {
  EmptyIntervalError() : std::domain_error("best_rational_in_interval: hi < lo") {}
};

/// The rational with the smallest denominator in the closed interval [a, b]
/// (ties broken by smallest |numerator|, then by the smaller value), found by
/// the continued-fraction / Stern-Brocot descent.
Rational simplest_in_interval(const Rational& a, const Rational& b);

/// Shrinks [lo, hi] symmetrically by margin*(hi-lo) on each side and returns
/// the simplest rational inside. lo and hi are converted exactly from double;
/// a degenerate interval returns its exact double value. margin must lie in
/// [0, 1/2).
Rational best_rational_in_interval(double lo, double hi, const Rational& margin);

/// Enumerates the rationals of a closed interval ordered by (denominator,
/// |numerator|, value); the first yield equals simplest_in_interval. Used by
/// the certificate search to re-round after an exact-PSD failure.
class RationalIntervalEnumerator {
 public:
  RationalIntervalEnumerator(Rational lo, Rational hi);

  /// Next candidate, or nullopt once the denominator exceeds `max_den`.
  std::optional<Rational> next(const mpz_class& max_den = mpz_class(1000000));

 private:
  void refill();

  Rational lo_, hi_;
  mpz_class q_;
  std::vector<Rational> batch_;  // candidates for denominator q_, ordered
  size_t pos_ = 0;
};

}  // namespace viz

#endif  // VIZING_BEST_RATIONAL_HPP
