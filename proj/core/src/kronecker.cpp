#include "phtandem/kronecker.hpp"

#include "phtandem/errors.hpp"

namespace phtandem {

Matrix kron_product(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) {
    throw DimensionError("kron_product: empty operand");
  }
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  r.ensure_finite("kron_product");
  return r;
}

Matrix kron_sum(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square()) {
    throw DimensionError("kron_sum: operands must be square");
  }
  const std::size_t m = a.rows();
  const std::size_t n = b.rows();
  Matrix r(m * n, m * n);
  // a (x) I_n contributes a(i,j) at ((i,k),(j,k)); I_m (x) b contributes
  // b(k,l) at ((i,k),(i,l)).
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        r(i * n + k, j * n + k) += aij;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        r(i * n + k, i * n + l) += b(k, l);
      }
    }
  }
  r.ensure_finite("kron_sum");
  return r;
}

}  // namespace phtandem
