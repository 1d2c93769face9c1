#ifndef VIZING_CERTIFICATE_HPP
#define VIZING_CERTIFICATE_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vizing/f_system.hpp"
#include "vizing/rat_matrix.hpp"
#include "vizing/sdp.hpp"
#include "vizing/variety.hpp"

namespace viz {

/// How one free variable was pinned during the search.
struct ProvenanceEntry {
  std::string var;  // "F_i_j"
  Rational value;
  std::optional<std::pair<double, double>> interval;  // observed SDP [min,max]
  Rational margin;
  std::string source;  // "user" | "sdp" | "backtrack"
};

/// Exact minimum-degree certificate: a rational PSD solution of the
/// d-dependent equation system, its LDL^T witness, and (when the unpivoted
/// factorization goes through, which it always does for exact PSD input) the
/// radical-form coefficient rows whose Gram reproduces F. The certificate is
/// anchor-independent: it applies to every vertex (g,h) and every (n_G, n_H)
/// with n_G + n_H - 1 = d.
struct Certificate {
  int d = 0;
  int m = 0;
  RatMatrix F;
  LdlWitness ldl;
  std::optional<std::vector<RadicalRow>> rows;
  std::vector<ProvenanceEntry> provenance;
  std::string anchor_note;
};

struct SearchOptions {
  Rational margin = Rational(1, 20);
  std::map<std::string, Rational> fixed;  // "F_i_j" -> exact value
  int max_backtracks = 8;
  // Free variables are fixed diagonal-first, then off-diagonals lexicographic.
};

struct SearchFailure {
  enum class Kind { NoSolutionFound, UnsupportedD } kind;
  std::string detail;
};

using SearchResult = std::variant<Certificate, SearchFailure>;

/// End-to-end search: build the equation system, parametrize by RREF, pin the
/// free variables one at a time (user fixes are honored as exact extra
/// equations; otherwise a min/max SDP pair bounds the variable and the
/// simplest rational inside the margin-shrunken interval is substituted),
/// then certify PSD exactly. An exact-PSD failure re-rounds the most recent
/// variable with the next-best rational (denominator-increasing), up to
/// max_backtracks re-rounds in total.
SearchResult find_certificate(int d, const SearchOptions& opts = {});

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Verdict {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
};

/// Zero-tolerance re-verification: equations, stored witness, a fresh PSD
/// factorization, the rho-basis residual identity, and the radical rows.
Verdict verify_exact(const Certificate& c);

/// Exhaustive check over the variety of the (n_g, n_h) class: at every point,
/// the value of the certificate's sum of squares (the extended quadratic form
/// over binomials, plus the unit squares outside the cross) must equal
/// f_viz = sum x - 1 exactly, and f_viz must be nonnegative. The anchor
/// defaults to (n_g, n_h), a non-dominator vertex whenever one exists.
Verdict verify_bruteforce(const Certificate& c, int n_g, int n_h,
                          std::optional<std::pair<int, int>> anchor = std::nullopt,
                          int vertex_cap = 12, bool parallel = true);

/// Raw kernel result shared by the serial reference and the OpenMP kernel.
struct BruteForceStats {
  uint64_t variety_points = 0;
  uint64_t equality_failures = 0;
  uint64_t negativity_failures = 0;
  int64_t first_bad_index = -1;
};

BruteForceStats brute_force_scan_serial(const Certificate& c, const VarietyDomain& dom,
                                        int anchor_g, int anchor_h);
BruteForceStats brute_force_scan_parallel(const Certificate& c, const VarietyDomain& dom,
                                          int anchor_g, int anchor_h);

/// The degree-ell SOS feasibility SDP of the recalled full pipeline: v is the
/// vector of all monomials of degree <= ell that equal their own normal form
/// by the closed-form basis, and the constraints match coefficients of
/// NF(v^T X v) with f_viz. Desk scale only: n_g + n_h <= 6, ell <= 3.
SdpProblem full_sdp_pipeline(int n_g, int n_h, int ell);

/// Number of self-reduced monomials (the SDP dimension) for diagnostics.
std::vector<Polynomial> self_reduced_monomials(int n_g, int n_h, int ell);

struct StructureEntry {
  int d = 0;
  bool even = false;
  bool exact_ok = false;       // even: forced values; odd: F_{1,1} free
  std::string exact_detail;
  // Odd d only: numerical evidence that F_{1,1} = d-1 admits no PSD solution.
  std::optional<bool> f11_pin_likely_infeasible;
  double infeas_measure = 0.0;
};

struct StructureReport {
  std::vector<StructureEntry> entries;
  bool exact_all_ok = true;
  bool numeric_all_ok = true;
};

/// Cross-d structural identities: for even d the RREF must force
/// F_{1,1} = d-1, F_{m,m} = d/C(d,d/2) and F_{m-1,m} = -F_{m,m}(1+d/4)
/// exactly; for odd d, F_{1,1} must be free and pinning it to d-1 is
/// SDP-infeasible (reported as numerical evidence). Range within [3, 14].
StructureReport check_structure_identities(int d_from, int d_to);

/// Assembles a certificate from an exact Gram matrix (used for the published
/// coefficient tables); returns nullopt if F is not exactly PSD or violates
/// the equation system.
std::optional<Certificate> certificate_from_f(int d, const RatMatrix& F,
                                              std::string provenance_note = "");

/// The SDP over the m x m matrix variable whose constraints are the d
/// equations plus optional pinned entries ("F_i_j" -> value); the objective
/// selects entry (obj_i, obj_j). This is the min/max subproblem of the
/// free-variable fixing loop, exposed for bound inspection.
SdpProblem fsystem_entry_sdp(int d, const std::map<std::string, Rational>& pinned,
                             int obj_i, int obj_j);

}  // namespace viz

#endif  // VIZING_CERTIFICATE_HPP
