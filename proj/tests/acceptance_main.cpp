// Acceptance suite: runs the project's gate criteria end to end and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

#include "published_tables.hpp"
#include "vizing/certificate.hpp"
#include "vizing/groebner.hpp"
#include "vizing/ideal.hpp"
#include "vizing/json_io.hpp"

using namespace viz;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<bool(std::string&)> body;
};

int failures = 0;

void run_criterion(const Criterion& c) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = c.body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= c.time_limit_s;
  if (!in_time && ok) detail += " [exceeded time limit]";
  ok = ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2fs%s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
              c.name.c_str(), secs, in_time ? "" : " > limit",
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

std::map<int, Certificate> found_certs;  // criterion 7 output, reused by 8

bool crit1(std::string& detail) {
  SearchOptions opts;
  opts.fixed["F_1_1"] = Q(6);
  opts.fixed["F_2_2"] = Q(3);
  SearchResult res = find_certificate(5, opts);
  auto* cert = std::get_if<Certificate>(&res);
  if (!cert) {
    detail = "search failed";
    return false;
  }
  if (!(cert->F == viz_tables::published_gram(5))) {
    detail = "F differs from the walkthrough matrix";
    return false;
  }
  const Verdict v = verify_exact(*cert);
  if (!v.all_pass()) {
    detail = "verify_exact not all green";
    return false;
  }
  return true;
}

bool crit2(std::string& detail) {
  const auto bound = [&](const std::map<std::string, Rational>& pin, int i, int j,
                         bool maximize) {
    const SdpSolution s = solve(fsystem_entry_sdp(5, pin, i, j), maximize);
    if (s.status != SdpStatus::Optimal) throw std::runtime_error("SDP not optimal");
    return s.primal_obj;
  };
  const double f11_min = bound({}, 1, 1, false);
  const double f11_max = bound({}, 1, 1, true);
  const double f22_min = bound({{"F_1_1", Q(6)}}, 2, 2, false);
  const double f22_max = bound({{"F_1_1", Q(6)}}, 2, 2, true);
  std::ostringstream os;
  os << "F11 in [" << f11_min << ", " << f11_max << "], F22|F11=6 in [" << f22_min << ", "
     << f22_max << "]";
  detail = os.str();
  return std::abs(f11_min - 4.68455) <= 5e-3 && std::abs(f11_max - 38.41658) <= 5e-3 &&
         std::abs(f22_min - 2.64289) <= 5e-3 && std::abs(f22_max - 3.26414) <= 5e-3;
}

bool crit3(std::string& detail) {
  for (auto [ng, nh] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const ClassParams p(ng, nh);
    if (!(buchberger(build_generators(p)) == canonical_sort(closed_form_gb(p)))) {
      detail = "oracle mismatch at (" + std::to_string(ng) + "," + std::to_string(nh) + ")";
      return false;
    }
  }
  const auto basis = closed_form_gb(ClassParams(3, 3));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
        detail = "S-polynomial does not reduce to zero at (3,3)";
        return false;
      }
    }
  detail = "(2,2),(3,2),(2,3) identical; (3,3) S-polynomials reduce to 0";
  return true;
}

bool crit4(std::string& detail) {
  auto unit = [](int d, int i) { return RhoPoly::unit(d, i); };
  auto expect = [](int d, std::vector<long> v) {
    RhoPoly r(d);
    for (size_t i = 0; i < v.size(); ++i) r.coeffs[i] = Q(v[i]);
    return r;
  };
  const bool ok = rho_mul(unit(4, 1), unit(4, 1)) == expect(4, {0, 1, 2, 0, 0}) &&
                  rho_mul(unit(4, 2), unit(4, 2)) == expect(4, {0, 0, 1, 6, 6}) &&
                  rho_mul(unit(3, 1), unit(3, 1)) == expect(3, {0, 1, 2, 0}) &&
                  rho_mul(unit(3, 2), unit(3, 2)) == expect(3, {0, 0, 1, 6}) &&
                  rho_mul(unit(4, 1), unit(4, 2)) == expect(4, {0, 0, 2, 3, 0});
  if (!ok) detail = "a printed product reduction does not match";
  return ok;
}

bool crit5(std::string& detail) {
  for (int d : {6, 7, 8}) {
    const auto cert = certificate_from_f(d, viz_tables::published_gram(d));
    if (!cert || !verify_exact(*cert).all_pass()) {
      detail = "d=" + std::to_string(d) + " table fails exact verification";
      return false;
    }
  }
  detail = "d=6,7,8 coefficient tables verify with zero tolerance";
  return true;
}

bool crit6(std::string& detail) {
  for (int d : {4, 6, 8, 10, 12, 14}) {
    const FSystem fs = build_f_system(d);
    const int m = fs.m;
    const auto space = rref(fvar_count(m), to_linear_equations(fs), fvar_preference(m));
    auto forced = [&](int i, int j, const Rational& want) {
      const auto it = space.dependent.find(fvar_index(i, j, m));
      return it != space.dependent.end() && it->second.is_constant() &&
             it->second.constant == want;
    };
    const Rational fmm = Q(d) / binom(d, d / 2);
    if (!forced(1, 1, Q(d - 1)) || !forced(m, m, fmm) ||
        !forced(m - 1, m, -fmm * (Q(1) + Q(d, 4)))) {
      detail = "closed forms not forced at d=" + std::to_string(d);
      return false;
    }
  }
  detail = "F_11 = d-1 and both end-column closed forms forced for even d up to 14";
  return true;
}

bool crit7(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (int d = 3; d <= 10; ++d) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res = find_certificate(d);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto* cert = std::get_if<Certificate>(&res);
    if (!cert || !verify_exact(*cert).all_pass() || secs > 120.0) {
      ok = false;
      os << "d=" << d << (cert ? (secs > 120.0 ? " too slow" : " verify failed") : " no cert")
         << "; ";
      continue;
    }
    found_certs.emplace(d, std::move(*cert));
    os << "d=" << d << " ok(" << std::fixed << std::setprecision(1) << secs << "s) ";
  }
  // Best effort beyond the gate: failures are logged, not gating.
  for (int d = 11; d <= 12; ++d) {
    SearchResult res = find_certificate(d);
    if (auto* cert = std::get_if<Certificate>(&res)) {
      const bool green = verify_exact(*cert).all_pass();
      os << "[best-effort d=" << d << ": " << (green ? "ok" : "found but not green") << "] ";
      if (green) found_certs.emplace(d, std::move(*cert));
    } else {
      os << "[best-effort d=" << d << ": " << std::get<SearchFailure>(res).detail << "] ";
    }
  }
  detail = os.str();
  return ok;
}

bool crit8(std::string& detail) {
  if (found_certs.empty()) {
    detail = "no certificates from criterion 7";
    return false;
  }
  // All class splits with both factors >= 2 and n_g * n_h <= 12.
  std::ostringstream os;
  bool ok = true;
  int splits = 0;
  for (const auto& [d, cert] : found_certs) {
    for (int ng = 2; ng <= d - 1; ++ng) {
      const int nh = d + 1 - ng;
      if (nh < 2 || ng * nh > 12) continue;
      ++splits;
      for (const auto anchor : {std::pair{ng, nh}, std::pair{1, 1}}) {
        const Verdict v = verify_bruteforce(cert, ng, nh, anchor);
        if (!v.all_pass()) {
          ok = false;
          os << "d=" << d << " split(" << ng << "," << nh << ") anchor(" << anchor.first
             << "," << anchor.second << ") failed; ";
        }
      }
    }
  }
  const auto points22 = VarietyDomain(ClassParams(2, 2)).enumerate().size();
  if (points22 != 11) {
    ok = false;
    os << "(2,2) variety has " << points22 << " points, expected 11; ";
  }
  os << splits << " splits checked, (2,2) variety = " << points22 << " points";
  detail = os.str();
  return ok;
}

bool crit9(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (auto [ng, nh] : {std::pair{2, 2}, std::pair{3, 2}}) {
    for (int ell : {1, 2}) {
      const FeasibilityResult fr = feasibility(full_sdp_pipeline(ng, nh, ell));
      const bool expect_feasible = ell == 2;
      if (fr.feasible != expect_feasible) {
        ok = false;
        os << "(" << ng << "," << nh << ") ell=" << ell << " got "
           << (fr.feasible ? "Feasible" : "LikelyInfeasible") << "; ";
      }
    }
  }
  os << "ell=1 LikelyInfeasible, ell=2 Feasible at (2,2) and (3,2) [numerical evidence]";
  detail = os.str();
  return ok;
}

bool crit10(std::string& detail) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const double tol = 1e-10;
  bool ok = true;
  const std::pair<double, double> pairs[] = {
      {s2 + 3, -s2 - 2}, {-s2 + 3, s2 - 2}, {s2 - 3, -s2 + 2}, {-s2 - 3, s2 + 2}};
  for (const auto& [a, b] : pairs) {
    ok = ok && std::abs((a * a + 1) - (2 * a * a + b * b + 2 * a * b)) < tol;
    ok = ok && std::abs(-(a * a + 1) - (6 * b * b + 6 * a * b)) < tol;
  }
  const std::array<double, 3> triples[] = {{-s3, 4.0 / 9 * s3, -s6 / 9},
                                           {-s3, 4.0 / 9 * s3, s6 / 9},
                                           {s3, -4.0 / 9 * s3, -s6 / 9},
                                           {s3, -4.0 / 9 * s3, s6 / 9}};
  for (const auto& [a, b, dl] : triples) {
    ok = ok && std::abs((a * a + 1) - (2 * a * a + b * b + 2 * a * b + dl * dl)) < tol;
    ok = ok && std::abs(-(a * a + 1) - (6 * b * b + 6 * a * b + 6 * dl * dl)) < tol;
    ok = ok && std::abs((a * a + 1) - (6 * b * b + 6 * dl * dl)) < tol;
  }
  detail = "four degree-3 pairs and four degree-4 triples satisfy their systems (tol 1e-10)";
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "d=5 walkthrough reproduction, exact tier", 5.0, crit1},
      {2, "d=5 free-variable bounds, numeric tier (tol 5e-3)", 10.0, crit2},
      {3, "Buchberger oracle equals the closed-form basis", 120.0, crit3},
      {4, "printed rho-product reductions", 5.0, crit4},
      {5, "published coefficient tables d=6,7,8 verify exactly", 10.0, crit5},
      {6, "even-d forced closed forms up to d=14", 30.0, crit6},
      {7, "end-to-end search with default options, d=3..10", 1200.0, crit7},
      {8, "brute-force variety oracle over all capped splits", 120.0, crit8},
      {9, "minimum-degree evidence at (2,2) and (3,2)", 60.0, crit9},
      {10, "degree-3/-4 tuple spot checks (tol 1e-10)", 5.0, crit10},
  };
  for (const auto& c : criteria) run_criterion(c);
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
