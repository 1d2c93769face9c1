#include <doctest.h>

#include <cmath>
#include <random>

#include "vizing/f_system.hpp"
#include "vizing/ideal.hpp"
#include "vizing/rho.hpp"
#include "vizing/variety.hpp"

#include "test_seed.hpp"

using namespace viz;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

RhoPoly rp(int d, std::vector<long> ints) {
  RhoPoly r(d);
  for (size_t i = 0; i < ints.size(); ++i) r.coeffs[i] = Q(ints[i]);
  return r;
}

RhoPoly random_rho(std::mt19937& rng, int d) {
  std::uniform_int_distribution<long> c(-6, 6);
  RhoPoly r(d);
  for (auto& x : r.coeffs) x = Q(c(rng));
  return r;
}

RatMatrix example55_f() {
  RatMatrix F(3, 3);
  F.at(0, 0) = Q(6);   F.at(0, 1) = Q(-4);    F.at(0, 2) = Q(59, 40);
  F.at(1, 0) = Q(-4);  F.at(1, 1) = Q(3);     F.at(1, 2) = Q(-5, 4);
  F.at(2, 0) = Q(59, 40); F.at(2, 1) = Q(-5, 4); F.at(2, 2) = Q(3, 5);
  return F;
}

RatMatrix d6_published_f() {
  RatMatrix F(3, 3);
  F.at(0, 0) = Q(5);   F.at(0, 1) = Q(-3);   F.at(0, 2) = Q(21, 20);
  F.at(1, 0) = Q(-3);  F.at(1, 1) = Q(2);    F.at(1, 2) = Q(-3, 4);
  F.at(2, 0) = Q(21, 20); F.at(2, 1) = Q(-3, 4); F.at(2, 2) = Q(3, 10);
  return F;
}

std::map<std::pair<int, int>, long long> term_map(const FEquation& eq) {
  std::map<std::pair<int, int>, long long> m;
  for (const auto& t : eq.terms) m[{t.i, t.j}] = t.coeff;
  return m;
}

}  // namespace

TEST_CASE("binomial cache") {
  CHECK(binom(6, 3) == Q(20));
  CHECK(binom(0, 0) == Q(1));
  CHECK(binom(5, 7) == Q(0));
  CHECK(binom(4, -1) == Q(0));
  CHECK(binom(64, 32).str() == "1832624140942590534");
}

TEST_CASE("rho products printed in the degree-4 and degree-3 walkthroughs") {
  // d = 4
  CHECK(rho_mul(RhoPoly::unit(4, 1), RhoPoly::unit(4, 1)) == rp(4, {0, 1, 2, 0, 0}));
  CHECK(rho_mul(RhoPoly::unit(4, 2), RhoPoly::unit(4, 2)) == rp(4, {0, 0, 1, 6, 6}));
  CHECK(rho_mul(RhoPoly::unit(4, 1), RhoPoly::unit(4, 2)) == rp(4, {0, 0, 2, 3, 0}));
  // d = 3: the rho^4 term is cut by the cap
  CHECK(rho_mul(RhoPoly::unit(3, 2), RhoPoly::unit(3, 2)) == rp(3, {0, 0, 1, 6}));
  CHECK(rho_mul(RhoPoly::unit(3, 1), RhoPoly::unit(3, 1)) == rp(3, {0, 1, 2, 0}));
  CHECK(rho_mul(RhoPoly::unit(3, 1), RhoPoly::unit(3, 2)) == rp(3, {0, 0, 2, 3}));
}

TEST_CASE("rho_mul dimension mismatch") {
  CHECK_THROWS_AS(rho_mul(RhoPoly::unit(3, 1), RhoPoly::unit(4, 1)), std::invalid_argument);
}

TEST_CASE("rho algebra properties") {
  std::mt19937 rng(test_seed(11));
  for (int d = 1; d <= 8; ++d) {
    const RhoPoly one = RhoPoly::unit(d, 0);
    for (int trial = 0; trial < 10; ++trial) {
      const RhoPoly a = random_rho(rng, d), b = random_rho(rng, d), c = random_rho(rng, d);
      CHECK(rho_mul(a, b) == rho_mul(b, a));
      CHECK(rho_mul(rho_mul(a, b), c) == rho_mul(a, rho_mul(b, c)));
      CHECK(rho_mul(a, one) == a);
    }
  }
}

TEST_CASE("inclusion-exclusion coefficients") {
  CHECK(inclusion_exclusion(3) == rp(3, {1, -1, 1, -1}));
  CHECK(inclusion_exclusion(0) == rp(0, {1}));
}

TEST_CASE("square_row equals the bilinear product route") {
  std::mt19937 rng(test_seed(13));
  std::uniform_int_distribution<long> ci(-7, 7);
  for (int d = 3; d <= 9; ++d) {
    const int m = (d + 1) / 2;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> c(m + 1);
      for (auto& x : c) x = Q(ci(rng), 1 + trial % 3);
      RhoPoly as_rho(d);
      for (int i = 0; i <= m; ++i) as_rho.coeffs[i] = c[i];
      CHECK(square_row(c, d) == rho_mul(as_rho, as_rho));
    }
  }
  CHECK(square_row(std::vector<Rational>(3), 3) == RhoPoly(3));
}

TEST_CASE("square_row reproduces the degree-3 walkthrough expansion numerically") {
  const double alpha = std::sqrt(2.0) + 3.0, beta = -std::sqrt(2.0) - 2.0;
  const std::vector<Rational> c = {Rational::from_double(-alpha), Rational::from_double(alpha),
                                   Rational::from_double(beta)};
  const RhoPoly sq = square_row(c, 3);
  const double a2 = alpha * alpha, b2 = beta * beta, ab = alpha * beta;
  CHECK(sq.coeffs[0].to_double() == doctest::Approx(a2).epsilon(1e-12));
  CHECK(sq.coeffs[1].to_double() == doctest::Approx(-a2).epsilon(1e-12));
  CHECK(sq.coeffs[2].to_double() == doctest::Approx(2 * a2 + b2 + 2 * ab).epsilon(1e-12));
  CHECK(sq.coeffs[3].to_double() == doctest::Approx(6 * b2 + 6 * ab).epsilon(1e-12));
}

TEST_CASE("build_f_system rejects d < 3") {
  CHECK_THROWS_AS(build_f_system(2), UnsupportedDError);
}

TEST_CASE("the d=5 system is the published four-equation system") {
  const FSystem fs = build_f_system(5);
  REQUIRE(fs.m == 3);
  REQUIRE(fs.equations.size() == 4);
  using M = std::map<std::pair<int, int>, long long>;
  CHECK(fs.equations[0].lhs_sign == 1);
  CHECK(term_map(fs.equations[0]) == M{{{1, 1}, 2}, {{1, 2}, 2}, {{2, 2}, 1}});
  CHECK(fs.equations[1].lhs_sign == -1);
  CHECK(term_map(fs.equations[1]) ==
        M{{{1, 2}, 6}, {{2, 2}, 6}, {{1, 3}, 4}, {{2, 3}, 6}, {{3, 3}, 1}});
  CHECK(fs.equations[2].lhs_sign == 1);
  CHECK(term_map(fs.equations[2]) ==
        M{{{2, 2}, 6}, {{1, 3}, 8}, {{2, 3}, 24}, {{3, 3}, 12}});
  CHECK(fs.equations[3].lhs_sign == -1);
  CHECK(term_map(fs.equations[3]) == M{{{2, 3}, 20}, {{3, 3}, 30}});
}

TEST_CASE("the d=3 system matches the two-equation remark") {
  const FSystem fs = build_f_system(3);
  REQUIRE(fs.m == 2);
  REQUIRE(fs.equations.size() == 2);
  using M = std::map<std::pair<int, int>, long long>;
  CHECK(term_map(fs.equations[0]) == M{{{1, 1}, 2}, {{1, 2}, 2}, {{2, 2}, 1}});
  CHECK(term_map(fs.equations[1]) == M{{{1, 2}, 6}, {{2, 2}, 6}});
}

TEST_CASE("the degree-4 triple solves its three equations exactly") {
  // (alpha, beta, delta) = (-sqrt3, (4/9)sqrt3, (1/9)sqrt6):
  // F = [[alpha^2, alpha beta], [alpha beta, beta^2 + delta^2]] is rational.
  RatMatrix F(2, 2);
  F.at(0, 0) = Q(3);
  F.at(0, 1) = Q(-4, 3);
  F.at(1, 0) = Q(-4, 3);
  F.at(1, 1) = Q(16, 27) + Q(2, 27);
  CHECK(satisfies_f_system(build_f_system(4), F));
}

TEST_CASE("example matrices satisfy or fail their systems") {
  CHECK(satisfies_f_system(build_f_system(5), example55_f()));
  RatMatrix tampered = example55_f();
  tampered.at(2, 2) = Q(2, 3);
  tampered.at(1, 1) = Q(3);
  CHECK(!satisfies_f_system(build_f_system(5), tampered));
}

TEST_CASE("sos_residual certifies the d=5 and d=6 matrices") {
  CHECK(sos_residual(example55_f(), 5) == certificate_target(Q(6), 5));
  CHECK(sos_residual(d6_published_f(), 6) == certificate_target(Q(5), 6));
  // the target is 7 * alternating + (rho^1 - rho^0) for d=5
  const RhoPoly t = certificate_target(Q(6), 5);
  CHECK(t.coeffs[0] == Q(6));
  CHECK(t.coeffs[1] == Q(-6));
  CHECK(t.coeffs[2] == Q(7));
}

TEST_CASE("the zero matrix is never a certificate") {
  for (int d : {3, 4, 5, 6}) {
    const int m = (d + 1) / 2;
    const RhoPoly res = sos_residual(RatMatrix(m, m), d);
    CHECK(res == RhoPoly(d));
    CHECK(!(res == certificate_target(Q(0), d)));
  }
}

TEST_CASE("equation coefficients are the residual sensitivities (exact)") {
  for (int d : {3, 4, 5, 6, 7}) {
    const FSystem fs = build_f_system(d);
    const int m = fs.m;
    const RatMatrix base(m, m);
    const RhoPoly res0 = sos_residual(base, d);
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j) {
        RatMatrix pert(m, m);
        pert.at(i - 1, j - 1) = Q(1);
        pert.at(j - 1, i - 1) = Q(1);
        const RhoPoly res1 = sos_residual(pert, d);
        for (const auto& eq : fs.equations) {
          Rational expect;
          for (const auto& t : eq.terms)
            if (t.i == i && t.j == j) expect = Q(t.coeff);
          CHECK(res1.coeffs[eq.k] - res0.coeffs[eq.k] == expect);
        }
      }
  }
}

TEST_CASE("even-d closed forms: F_11 = d-1, F_mm = d/C(d,d/2), F_m-1,m") {
  for (int d : {4, 6, 8, 10, 12, 14}) {
    const FSystem fs = build_f_system(d);
    const int m = fs.m;
    const auto space = rref(fvar_count(m), to_linear_equations(fs), fvar_preference(m));
    const auto& f11 = space.dependent.at(fvar_index(1, 1, m));
    REQUIRE(f11.is_constant());
    CHECK(f11.constant == Q(d - 1));
    const Rational fmm = Q(d) / binom(d, d / 2);
    const auto& last = space.dependent.at(fvar_index(m, m, m));
    REQUIRE(last.is_constant());
    CHECK(last.constant == fmm);
    const auto& offd = space.dependent.at(fvar_index(m - 1, m, m));
    REQUIRE(offd.is_constant());
    CHECK(offd.constant == -fmm * (Q(1) + Q(d, 4)));
  }
}

TEST_CASE("eval_rho_point") {
  CHECK(eval_rho_point(0, 0) == Q(1));
  CHECK(eval_rho_point(0, 5) == Q(1));
  CHECK(eval_rho_point(2, 3) == Q(3));
  CHECK(eval_rho_point(4, 3) == Q(0));
}

TEST_CASE("rho evaluation at variety points matches polynomial evaluation") {
  std::mt19937 rng(test_seed(17));
  for (auto [ng, nh] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const ClassParams p(ng, nh);
    const VarietyDomain dom(p);
    const auto points = dom.enumerate();
    for (int trial = 0; trial < 5; ++trial) {
      const RhoPoly r = random_rho(rng, p.d());
      for (auto [g, h] : {std::pair{1, 1}, std::pair{ng, nh}}) {
        const Polynomial lifted = lift_rho(r, p, g, h);
        uint32_t cross_mask = 0;
        for (const auto& [g2, h2] : cross_set(p, g, h))
          cross_mask |= 1u << dom.x_bit(g2, h2);
        for (const auto& pt : points) {
          const int t = __builtin_popcount(pt.x_bits & cross_mask);
          Rational via_rho;
          for (int i = 0; i <= p.d(); ++i) via_rho += r.coeffs[i] * eval_rho_point(i, t);
          Rational direct;
          for (const auto& [mono, coeff] : lifted.terms()) {
            bool alive = true;
            for (const auto& [v, e] : mono.factors())
              if (!dom.value(pt, v)) {
                alive = false;
                break;
              }
            if (alive) direct += coeff;
          }
          CHECK(via_rho == direct);
        }
      }
    }
  }
}
