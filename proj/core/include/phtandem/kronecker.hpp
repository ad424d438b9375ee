#ifndef PHTANDEM_KRONECKER_HPP
#define PHTANDEM_KRONECKER_HPP

#include "phtandem/matrix.hpp"

namespace phtandem {

/// Kronecker product: block (i,j) of the result is a(i,j) * b, so the result
/// has dimensions (a.rows*b.rows) x (a.cols*b.cols).
Matrix kron_product(const Matrix& a, const Matrix& b);

/// Kronecker sum a (+) b = a (x) I_n + I_m (x) b for square a (m x m) and
/// b (n x n). Throws DimensionError on a non-square operand.
Matrix kron_sum(const Matrix& a, const Matrix& b);

}  // namespace phtandem

#endif
