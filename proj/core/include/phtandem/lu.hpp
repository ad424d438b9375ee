#ifndef PHTANDEM_LU_HPP
#define PHTANDEM_LU_HPP

#include <string>
#include <vector>

#include "phtandem/matrix.hpp"

namespace phtandem {

/// LU decomposition with partial pivoting. This is the single solve kernel of
/// the library: column systems A x = b directly, row systems x A = b through
/// the transposed factorization, and explicit inverses column by column.
///
/// Construction throws SingularMatrixError (carrying the pivot magnitude)
/// when the matrix is singular to working precision. The constructor's
/// `label` names the matrix in diagnostics.
class LuFactorization {
 public:
  explicit LuFactorization(const Matrix& a, std::string label = "matrix");

  std::size_t order() const { return n_; }
  const std::string& label() const { return label_; }

  /// Solves A x = rhs for a multi-column rhs (rhs.rows == order).
  Matrix solve(const Matrix& rhs) const;

  /// Inverse assembled by solving against identity columns.
  Matrix inverse() const;

  /// Condition estimate ||A||_inf * ||A^{-1}||_inf, with the inverse taken
  /// from the factors. Values above 1e8 deserve a warning, not an error.
  double condition_estimate() const;

  /// Smallest |pivot| encountered during elimination.
  double min_pivot() const { return min_pivot_; }

 private:
  std::size_t n_ = 0;
  Matrix lu_;                    // packed L (unit diagonal, below) and U (on/above)
  std::vector<std::size_t> perm_;  // row permutation
  double min_pivot_ = 0.0;
  double a_inf_norm_ = 0.0;
  std::string label_;
};

/// One-shot solve of A x = rhs.
Matrix lu_solve(const Matrix& a, const Matrix& rhs);

/// Solves the row-vector system x * A = rhs_row (rhs_row is 1 x n or k x n)
/// by factoring the transpose, so a single LU kernel serves both orientations.
Matrix solve_row_system(const Matrix& a, const Matrix& rhs_row);

/// Explicit inverse of a square nonsingular matrix.
Matrix inverse(const Matrix& a);

}  // namespace phtandem

#endif
