#ifndef VIZING_RAT_MATRIX_HPP
#define VIZING_RAT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vizing/rational.hpp"

namespace viz {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const;

 private:
  size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Exact PSD witness: P^T F P = L diag(D) L^T with L unit lower triangular
/// and all D entries >= 0. (P^T F P)[i][j] means F[perm[i]][perm[j]].
struct LdlWitness {
  std::vector<size_t> perm;
  RatMatrix L;
  std::vector<Rational> D;

  RatMatrix reconstruct() const;  // P L diag(D) L^T P^T
  bool certifies(const RatMatrix& F) const;
};

struct LdltResult {
  enum class Status { Psd, NotPsd };
  Status status = Status::NotPsd;
  std::optional<LdlWitness> witness;       // set when Psd
  std::vector<Rational> negative_witness;  // set when NotPsd: v^T F v < 0

  bool psd() const { return status == Status::Psd; }
};

/// Exact PSD certification via LDL^T with diagonal pivoting: at each step the
/// largest remaining diagonal entry is chosen; a zero maximal pivot with any
/// nonzero remainder yields NotPsd together with an explicit vector v with
/// v^T F v < 0. Throws std::invalid_argument if F is not exactly symmetric.
LdltResult ldlt_psd(const RatMatrix& F);

/// Row of a radical-form Cholesky factor: sqrt(radicand) * coeffs.
struct RadicalRow {
  Rational radicand;               // >= 0
  std::vector<Rational> coeffs;    // length = dimension of F
};

/// Factors a PSD matrix as F = sum_w radicand_w * row_w row_w^T via the
/// unpivoted LDL^T (row_w = w-th column of L^T, radicand_w = D_w). Returns
/// nullopt (NeedsPivot) if the unpivoted elimination hits a zero pivot with a
/// nonzero remainder, which cannot happen for an exactly PSD input.
std::optional<std::vector<RadicalRow>> rat_cholesky_radical(const RatMatrix& F);

/// Evaluates v^T F v exactly.
Rational quadratic_form(const RatMatrix& F, const std::vector<Rational>& v);

}  // namespace viz

#endif  // VIZING_RAT_MATRIX_HPP
