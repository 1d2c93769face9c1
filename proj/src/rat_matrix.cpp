#include "vizing/rat_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace viz {

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix I(n, n);
  for (size_t i = 0; i < n; ++i) I.at(i, i) = Rational(1);
  return I;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  RatMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: dimension mismatch");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

RatMatrix LdlWitness::reconstruct() const {
  const size_t n = perm.size();
  RatMatrix ld(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ld.at(i, j) = L.at(i, j) * D[j];
  RatMatrix body = ld * L.transposed();  // = P^T F P
  RatMatrix f(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) f.at(perm[i], perm[j]) = body.at(i, j);
  return f;
}

bool LdlWitness::certifies(const RatMatrix& F) const {
  if (perm.size() != F.rows() || !F.is_square()) return false;
  for (const auto& d : D)
    if (d.sign() < 0) return false;
  for (size_t i = 0; i < perm.size(); ++i)
    if (L.at(i, i) != Rational(1)) return false;
  return reconstruct() == F;
}

namespace {

// Lifts a witness expressed in the Schur-complement coordinates of step k back
// to the original coordinates: solves L~^T vbar = [0; u] by back substitution
// (L~ is unit lower triangular with columns 0..k-1 filled), then undoes the
// permutation.
std::vector<Rational> lift_witness(const RatMatrix& L, const std::vector<size_t>& perm,
                                   size_t k, const std::vector<Rational>& u) {
  const size_t n = perm.size();
  std::vector<Rational> vbar(n);
  for (size_t i = k; i < n; ++i) vbar[i] = u[i - k];
  for (size_t ii = k; ii-- > 0;) {
    Rational s;
    for (size_t j = ii + 1; j < n; ++j)
      if (!L.at(j, ii).is_zero() && !vbar[j].is_zero()) s += L.at(j, ii) * vbar[j];
    vbar[ii] = -s;
  }
  std::vector<Rational> v(n);
  for (size_t i = 0; i < n; ++i) v[perm[i]] = vbar[i];
  return v;
}

LdltResult ldlt_impl(const RatMatrix& F, bool pivot, bool* needs_pivot) {
  const size_t n = F.rows();
  RatMatrix A = F;
  RatMatrix L = RatMatrix::identity(n);
  std::vector<Rational> D(n);
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;

  auto not_psd = [&](size_t k, std::vector<Rational> u) {
    LdltResult r;
    r.status = LdltResult::Status::NotPsd;
    r.negative_witness = lift_witness(L, perm, k, std::move(u));
    return r;
  };

  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    if (pivot) {
      for (size_t i = k + 1; i < n; ++i)
        if (A.at(i, i) > A.at(p, p)) p = i;
    }
    if (A.at(p, p).sign() < 0) {
      std::vector<Rational> u(n - k);
      u[p - k] = Rational(1);
      return not_psd(k, std::move(u));
    }
    if (A.at(p, p).is_zero()) {
      if (pivot) {
        // Largest remaining diagonal is zero, so all remaining diagonals are
        // <= 0; negatives were excluded by the pivot choice above.
        for (size_t i = k; i < n; ++i) {
          if (A.at(i, i).sign() < 0) {
            std::vector<Rational> u(n - k);
            u[i - k] = Rational(1);
            return not_psd(k, std::move(u));
          }
        }
        for (size_t i = k; i < n; ++i)
          for (size_t j = i + 1; j < n; ++j)
            if (!A.at(i, j).is_zero()) {
              // [[0, a],[a, 0]] block: (1, -sign(a)) gives value -2|a|.
              std::vector<Rational> u(n - k);
              u[i - k] = Rational(1);
              u[j - k] = Rational(A.at(i, j).sign() > 0 ? -1 : 1);
              return not_psd(k, std::move(u));
            }
        // Entire remaining block is zero.
        break;
      }
      // Unpivoted: a zero pivot is only admissible with a fully zero
      // row/column remainder.
      for (size_t i = k + 1; i < n; ++i)
        if (!A.at(i, k).is_zero()) {
          if (needs_pivot) *needs_pivot = true;
          return LdltResult{};
        }
      D[k] = Rational(0);
      continue;
    }
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      for (size_t i = 0; i < n; ++i) std::swap(A.at(i, k), A.at(i, p));
      for (size_t j = 0; j < k; ++j) std::swap(L.at(k, j), L.at(p, j));
      std::swap(perm[k], perm[p]);
    }
    D[k] = A.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      L.at(i, k) = A.at(i, k) / D[k];
      if (L.at(i, k).is_zero()) continue;
      for (size_t j = k + 1; j < n; ++j) A.at(i, j) -= L.at(i, k) * A.at(k, j);
      A.at(i, k) = Rational(0);
    }
  }

  LdltResult r;
  r.status = LdltResult::Status::Psd;
  r.witness = LdlWitness{std::move(perm), std::move(L), std::move(D)};
  return r;
}

}  // namespace

LdltResult ldlt_psd(const RatMatrix& F) {
  if (!F.is_symmetric()) throw std::invalid_argument("ldlt_psd: matrix not symmetric");
  return ldlt_impl(F, /*pivot=*/true, nullptr);
}

std::optional<std::vector<RadicalRow>> rat_cholesky_radical(const RatMatrix& F) {
  if (!F.is_symmetric())
    throw std::invalid_argument("rat_cholesky_radical: matrix not symmetric");
  bool needs_pivot = false;
  LdltResult res = ldlt_impl(F, /*pivot=*/false, &needs_pivot);
  if (needs_pivot || !res.psd()) return std::nullopt;
  const LdlWitness& w = *res.witness;
  const size_t n = F.rows();
  std::vector<RadicalRow> rows(n);
  for (size_t k = 0; k < n; ++k) {
    rows[k].radicand = w.D[k];
    rows[k].coeffs.resize(n);
    for (size_t i = k; i < n; ++i) rows[k].coeffs[i] = w.L.at(i, k);
  }
  return rows;
}

Rational quadratic_form(const RatMatrix& F, const std::vector<Rational>& v) {
  if (v.size() != F.rows() || !F.is_square())
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  Rational s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) s += v[i] * F.at(i, j) * v[j];
  }
  return s;
}

}  // namespace viz
