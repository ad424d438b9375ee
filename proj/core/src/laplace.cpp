#include "phtandem/laplace.hpp"

#include "phtandem/errors.hpp"
#include "phtandem/kronecker.hpp"
#include "phtandem/lu.hpp"
#include "phtandem/stability.hpp"

namespace phtandem {

Matrix laplace_cdf_at(const PhRepresentation& rep_s, const Matrix& m) {
    if (!m.square())
        throw DimensionError("laplace_cdf_at: argument matrix must be square");
    if (!is_stable(m))
        throw StabilityError("laplace_cdf_at: argument matrix is not stable");

    const std::size_t k = m.rows();
    const Matrix eye = Matrix::identity(k);
    const Matrix coupled = kron_sum(m, rep_s.generator());
    const Matrix rhs = kron_product(eye, Matrix::unit_column(rep_s.order()));
    const Matrix solved = lu_solve(coupled, rhs);      // (m (+) A_S)^{-1} (I (x) u_S)
    const Matrix left = kron_product(eye, rep_s.init());
    Matrix result = -inverse(m) + left * solved;
    result.ensure_finite("laplace_cdf_at");
    return result;
}

}  // namespace phtandem
