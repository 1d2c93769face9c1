#include "vizing/sdp.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <memory>
#include <cstdlib>
#include <stdexcept>

namespace viz {

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "Optimal";
    case SdpStatus::Infeasible: return "Infeasible";
    case SdpStatus::Unbounded: return "Unbounded";
    case SdpStatus::NumericalTrouble: return "NumericalTrouble";
  }
  return "?";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double inner(const MatrixXd& a, const MatrixXd& b) { return (a.array() * b.array()).sum(); }

// Largest step alpha with S + alpha*dS PSD (S positive definite), via the
// generalized eigenvalue problem dS v = lambda S v.
double step_length(const MatrixXd& S, const MatrixXd& dS) {
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> ges;
  ges.compute(dS, S, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success) return 0.0;
  const double lmin = ges.eigenvalues().minCoeff();
  if (lmin >= -1e-14) return 1e12;
  return -1.0 / lmin;
}

struct InternalProblem {
  int n = 0;
  MatrixXd C;
  std::vector<MatrixXd> A;
  VectorXd b;
};

struct InternalResult {
  SdpStatus status = SdpStatus::NumericalTrouble;
  MatrixXd X;
  VectorXd y;
  double pobj = 0, dobj = 0, pres = 0, dres = 0, gap = 0;
  int iters = 0;
};

InternalResult solve_internal(const InternalProblem& p, const SdpOptions& opts,
                              double init_scale) {
  const int n = p.n;
  const int m = static_cast<int>(p.A.size());

  MatrixXd X = MatrixXd::Identity(n, n) * init_scale;
  MatrixXd Z = MatrixXd::Identity(n, n) * std::max(1.0, p.C.norm());
  VectorXd y = VectorXd::Zero(m);

  const double bnorm = 1.0 + p.b.norm();
  const double cnorm = 1.0 + p.C.norm();

  // VIZING_SDP_TRACE=<path> appends one JSON line per iteration.
  const auto fclose_if = [](FILE* f) {
    if (f) std::fclose(f);
  };
  std::unique_ptr<FILE, decltype(fclose_if)> trace(nullptr, fclose_if);
  if (const char* path = std::getenv("VIZING_SDP_TRACE")) trace.reset(std::fopen(path, "a"));

  InternalResult res;
  double best_pres = 1e30, best_dres = 1e30;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    res.iters = iter;
    MatrixXd Rd = p.C - Z;
    for (int i = 0; i < m; ++i) Rd -= y[i] * p.A[i];
    VectorXd rp(m);
    for (int i = 0; i < m; ++i) rp[i] = p.b[i] - inner(p.A[i], X);

    const double mu = inner(X, Z) / n;
    res.pobj = inner(p.C, X);
    res.dobj = p.b.dot(y);
    res.pres = rp.norm() / bnorm;
    res.dres = Rd.norm() / cnorm;
    res.gap = std::abs(res.pobj - res.dobj) / (1.0 + std::abs(res.pobj) + std::abs(res.dobj));
    res.X = X;
    res.y = y;
    best_pres = std::min(best_pres, res.pres);
    best_dres = std::min(best_dres, res.dres);
    if (trace)
      std::fprintf(trace.get(),
                   "{\"n\":%d,\"iter\":%d,\"mu\":%.6e,\"pobj\":%.9e,\"dobj\":%.9e,"
                   "\"pres\":%.3e,\"dres\":%.3e}\n",
                   n, iter, mu, res.pobj, res.dobj, res.pres, res.dres);

    if (res.pres <= opts.feas_tol && res.dres <= opts.feas_tol && res.gap <= opts.gap_tol) {
      res.status = SdpStatus::Optimal;
      return res;
    }
    // Divergence heuristics: a wildly negative primal objective with good
    // feasibility suggests unboundedness; an exploding dual objective with
    // good dual feasibility suggests primal infeasibility.
    if (res.pobj < -1e11 && res.pres < 1e-6) {
      res.status = SdpStatus::Unbounded;
      return res;
    }
    if (res.dobj > 1e11 && res.dres < 1e-6) {
      res.status = SdpStatus::Infeasible;
      return res;
    }

    Eigen::LLT<MatrixXd> zllt(Z);
    if (zllt.info() != Eigen::Success) break;
    const MatrixXd Zi = zllt.solve(MatrixXd::Identity(n, n));

    // Schur complement M_ij = <A_i, Zi A_j X>.
    std::vector<MatrixXd> W(m);
    for (int j = 0; j < m; ++j) W[j] = Zi * p.A[j] * X;
    MatrixXd M(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) M(i, j) = inner(p.A[i], W[j]);
    M = ((M + M.transpose()) * 0.5).eval();
    Eigen::LDLT<MatrixXd> mldlt(M);
    if (mldlt.info() != Eigen::Success || !mldlt.isPositive()) {
      const double ridge = 1e-12 * (1.0 + M.trace());
      mldlt.compute(M + ridge * MatrixXd::Identity(m, m));
      if (mldlt.info() != Eigen::Success) break;
    }

    const MatrixXd ZiRdX = Zi * (Rd * X);

    auto direction = [&](double sigma_mu, const MatrixXd* K, MatrixXd& dX, MatrixXd& dZ,
                         VectorXd& dy) {
      MatrixXd G = sigma_mu * Zi - X - ZiRdX;
      if (K) G -= Zi * (*K);
      VectorXd rhs(m);
      for (int i = 0; i < m; ++i) rhs[i] = rp[i] - inner(p.A[i], G);
      dy = (m > 0) ? VectorXd(mldlt.solve(rhs)) : VectorXd();
      MatrixXd Ady = MatrixXd::Zero(n, n);
      for (int i = 0; i < m; ++i) Ady += dy[i] * p.A[i];
      dZ = Rd - Ady;
      dX = G + Zi * (Ady * X);
      dX = ((dX + dX.transpose()) * 0.5).eval();
    };

    // Predictor.
    MatrixXd dXa, dZa;
    VectorXd dya;
    direction(0.0, nullptr, dXa, dZa, dya);
    const double apa = std::min(1.0, 0.98 * step_length(X, dXa));
    const double ada = std::min(1.0, 0.98 * step_length(Z, dZa));
    const double mu_aff = inner(X + apa * dXa, Z + ada * dZa) / n;
    double sigma = std::pow(std::max(mu_aff, 0.0) / mu, 3.0);
    sigma = std::min(1.0, std::max(1e-10, sigma));

    // Corrector with the second-order cross term.
    const MatrixXd K = dZa * dXa;
    MatrixXd dX, dZ;
    VectorXd dy;
    direction(sigma * mu, &K, dX, dZ, dy);

    double ap = std::min(1.0, 0.98 * step_length(X, dX));
    double ad = std::min(1.0, 0.98 * step_length(Z, dZ));

    // Keep the iterates safely positive definite.
    for (int tries = 0; tries < 40; ++tries) {
      if (Eigen::LLT<MatrixXd>((X + ap * dX).eval()).info() == Eigen::Success) break;
      ap *= 0.7;
    }
    for (int tries = 0; tries < 40; ++tries) {
      if (Eigen::LLT<MatrixXd>((Z + ad * dZ).eval()).info() == Eigen::Success) break;
      ad *= 0.7;
    }
    if (ap < 1e-12 && ad < 1e-12) break;

    X += ap * dX;
    if (m > 0) y += ad * dy;
    Z += ad * dZ;
  }

  res.status = SdpStatus::NumericalTrouble;
  return res;
}

InternalProblem embed(const SdpProblem& p, bool maximize) {
  for (const auto& a : p.A)
    if (a.rows() != p.n || a.cols() != p.n || (a - a.transpose()).norm() > 1e-12)
      throw std::invalid_argument("sdp: constraint matrix not symmetric n x n");
  if (p.C.rows() != p.n || p.C.cols() != p.n ||
      (p.C - p.C.transpose()).norm() > 1e-12)
    throw std::invalid_argument("sdp: objective matrix not symmetric n x n");
  if (p.n < 1 || p.n > 64) throw std::invalid_argument("sdp: dimension out of range");

  const bool tb = p.trace_bound.has_value();
  InternalProblem ip;
  ip.n = p.n + (tb ? 1 : 0);
  ip.C = MatrixXd::Zero(ip.n, ip.n);
  ip.C.topLeftCorner(p.n, p.n) = maximize ? MatrixXd(-p.C) : p.C;
  ip.b.resize(static_cast<long>(p.A.size()) + (tb ? 1 : 0));
  for (size_t i = 0; i < p.A.size(); ++i) {
    MatrixXd a = MatrixXd::Zero(ip.n, ip.n);
    a.topLeftCorner(p.n, p.n) = p.A[i];
    ip.A.push_back(std::move(a));
    ip.b[static_cast<long>(i)] = p.b[i];
  }
  if (tb) {
    MatrixXd a = MatrixXd::Identity(ip.n, ip.n);
    ip.A.push_back(std::move(a));
    ip.b[static_cast<long>(p.A.size())] = *p.trace_bound;
  }
  return ip;
}

}  // namespace

SdpSolution solve(const SdpProblem& p, bool maximize, const SdpOptions& opts) {
  if (p.A.size() != p.b.size()) throw std::invalid_argument("sdp: |A| != |b|");
  const InternalProblem ip = embed(p, maximize);
  const double init_scale = p.trace_bound ? (1.0 + *p.trace_bound / ip.n) : 10.0;
  InternalResult r = solve_internal(ip, opts, init_scale);

  SdpSolution s;
  s.status = r.status;
  s.X = r.X.topLeftCorner(p.n, p.n);
  s.y = r.y.size() ? VectorXd(r.y.head(static_cast<long>(p.A.size()))) : VectorXd();
  s.primal_obj = maximize ? -r.pobj : r.pobj;
  s.dual_obj = maximize ? -r.dobj : r.dobj;
  s.primal_res = r.pres;
  s.dual_res = r.dres;
  s.gap = r.gap;
  s.iterations = r.iters;
  return s;
}

FeasibilityResult feasibility(const SdpProblem& p, const SdpOptions& opts) {
  if (!p.trace_bound)
    throw std::invalid_argument("feasibility: trace_bound must be set");
  const double tau = *p.trace_bound;
  const int n = p.n;
  const int N = n + 2;  // [X | t | s]: t is the deviation, s the trace slack

  const MatrixXd X0 = MatrixXd::Identity(n, n) * (tau / (2.0 * n));

  InternalProblem ip;
  ip.n = N;
  ip.C = MatrixXd::Zero(N, N);
  ip.C(n, n) = 1.0;  // minimize t
  ip.b.resize(static_cast<long>(p.A.size()) + 1);
  for (size_t i = 0; i < p.A.size(); ++i) {
    MatrixXd a = MatrixXd::Zero(N, N);
    a.topLeftCorner(n, n) = p.A[i];
    a(n, n) = p.b[i] - inner(p.A[i], X0);
    ip.A.push_back(std::move(a));
    ip.b[static_cast<long>(i)] = p.b[i];
  }
  MatrixXd atr = MatrixXd::Zero(N, N);
  atr.topLeftCorner(n, n) = MatrixXd::Identity(n, n);
  atr(n + 1, n + 1) = 1.0;
  ip.A.push_back(std::move(atr));
  ip.b[static_cast<long>(p.A.size())] = tau;

  SdpOptions phase_opts = opts;
  InternalResult r = solve_internal(ip, phase_opts, 1.0 + tau / N);

  FeasibilityResult out;
  out.infeas_measure = r.X.size() ? r.X(n, n) : 1.0;
  out.X = r.X.size() ? MatrixXd(r.X.topLeftCorner(n, n)) : MatrixXd::Zero(n, n);
  if (r.status == SdpStatus::Optimal && out.infeas_measure <= 1e-4) {
    out.feasible = true;
    out.info = "phase-I deviation " + std::to_string(out.infeas_measure) +
               " (numerical evidence)";
  } else {
    out.feasible = false;
    out.info = "phase-I deviation " + std::to_string(out.infeas_measure) + ", status " +
               to_string(r.status) + " (numerical evidence, not a proof)";
  }
  return out;
}

}  // namespace viz
