#include "phtandem/lu.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "phtandem/errors.hpp"

namespace phtandem {

LuFactorization::LuFactorization(const Matrix& a, std::string label)
    : n_(a.rows()), lu_(a), perm_(a.rows()), label_(std::move(label)) {
  if (!a.square()) {
    throw DimensionError(label_ + ": LU requires a square matrix");
  }
  a_inf_norm_ = a.inf_norm();
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});

  // Singular to working precision when a pivot column has no entry above
  // this scale-relative threshold.
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivot_floor =
      std::max(a_inf_norm_ * eps * static_cast<double>(n_),
               std::numeric_limits<double>::min());

  min_pivot_ = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot_row = k;
    double pivot_mag = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n_; ++i) {
      const double mag = std::abs(lu_(i, k));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = i;
      }
    }
    if (!(pivot_mag > pivot_floor)) {
      throw SingularMatrixError(
          label_ + ": singular to working precision (pivot " +
              std::to_string(pivot_mag) + " at step " + std::to_string(k) + ")",
          pivot_mag);
    }
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(lu_(k, j), lu_(pivot_row, j));
      }
      std::swap(perm_[k], perm_[pivot_row]);
    }
    min_pivot_ = std::min(min_pivot_, pivot_mag);
    const double inv_pivot = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) {
      const double factor = lu_(i, k) * inv_pivot;
      lu_(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n_; ++j) {
        lu_(i, j) -= factor * lu_(k, j);
      }
    }
  }
  lu_.ensure_finite(label_.c_str());
}

Matrix LuFactorization::solve(const Matrix& rhs) const {
  if (rhs.rows() != n_) {
    throw DimensionError(label_ + ": rhs row count does not match order");
  }
  const std::size_t m = rhs.cols();
  Matrix x(n_, m);
  // apply permutation
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < m; ++j) x(i, j) = rhs(perm_[i], j);
  // forward substitution, L unit lower
  for (std::size_t i = 1; i < n_; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const double lik = lu_(i, k);
      if (lik == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) x(i, j) -= lik * x(k, j);
    }
  }
  // back substitution, U upper
  for (std::size_t ii = n_; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n_; ++k) {
      const double uik = lu_(ii, k);
      if (uik == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) x(ii, j) -= uik * x(k, j);
    }
    // Divide rather than multiply by a reciprocal: one correctly-rounded
    // operation, so diagonal systems (and expm of zero) come out exact.
    const double diag = lu_(ii, ii);
    for (std::size_t j = 0; j < m; ++j) x(ii, j) /= diag;
  }
  x.ensure_finite((label_ + " solve").c_str());
  return x;
}

Matrix LuFactorization::inverse() const { return solve(Matrix::identity(n_)); }

double LuFactorization::condition_estimate() const {
  return a_inf_norm_ * inverse().inf_norm();
}

Matrix lu_solve(const Matrix& a, const Matrix& rhs) {
  return LuFactorization(a).solve(rhs);
}

Matrix solve_row_system(const Matrix& a, const Matrix& rhs_row) {
  if (rhs_row.cols() != a.rows()) {
    throw DimensionError("solve_row_system: rhs column count does not match order");
  }
  return LuFactorization(a.transpose()).solve(rhs_row.transpose()).transpose();
}

Matrix inverse(const Matrix& a) { return LuFactorization(a).inverse(); }

}  // namespace phtandem
