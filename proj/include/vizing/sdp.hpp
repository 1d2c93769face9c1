#ifndef VIZING_SDP_HPP
#define VIZING_SDP_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace viz {

/// min/max <C, X>  s.t.  <A_i, X> = b_i,  X >= 0 (PSD), optionally
/// tr(X) <= trace_bound. All matrices symmetric, n <= 64.
struct SdpProblem {
  int n = 0;
  Eigen::MatrixXd C;
  std::vector<Eigen::MatrixXd> A;
  std::vector<double> b;
  std::optional<double> trace_bound;
};

enum class SdpStatus { Optimal, Infeasible, Unbounded, NumericalTrouble };

std::string to_string(SdpStatus s);

struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalTrouble;
  Eigen::MatrixXd X;       // primal matrix (original n x n block)
  Eigen::VectorXd y;       // dual multipliers
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double primal_res = 0.0;
  double dual_res = 0.0;
  double gap = 0.0;
  int iterations = 0;
};

struct SdpOptions {
  double feas_tol = 1e-8;
  double gap_tol = 1e-8;
  int max_iters = 200;
};

/// Primal-dual interior-point solve (predictor-corrector on the symmetrized
/// HKM Newton direction, dense factorizations). Never reports Optimal unless
/// the residual and gap tolerances are met; degrades to NumericalTrouble.
SdpSolution solve(const SdpProblem& p, bool maximize = false, const SdpOptions& opts = {});

struct FeasibilityResult {
  bool feasible = false;
  Eigen::MatrixXd X;        // a feasible point when feasible
  double infeas_measure = 0.0;
  std::string info;         // numerical-evidence annotation
};

/// Phase-I feasibility: minimizes a nonnegative deviation t with
/// <A_i,X> + t*(b_i - <A_i,X0>) = b_i so that t = 0 recovers feasibility.
/// Requires trace_bound (compactifies the region so that a persistently
/// positive t is meaningful evidence of infeasibility, margin 1e-4). The
/// verdict is numerical evidence, never a proof.
FeasibilityResult feasibility(const SdpProblem& p, const SdpOptions& opts = {});

}  // namespace viz

#endif  // VIZING_SDP_HPP
