#ifndef PHTANDEM_LAPLACE_HPP
#define PHTANDEM_LAPLACE_HPP

#include "phtandem/matrix.hpp"
#include "phtandem/ph.hpp"

namespace phtandem {

/// Laplace transform of the cdf of rep_s evaluated at a matrix argument:
///
///   integral over [0, inf) of e^{mx} F_S(x) dx
///     = -m^{-1} + (I (x) a_S) (m (+) A_S)^{-1} (I (x) u_S)
///
/// where (x) is the Kronecker product and (+) the Kronecker sum. Defined
/// for any square stable m (the integral converges because both e^{mx} and
/// the survival weight decay). Throws StabilityError when m is unstable;
/// the Kronecker-sum system is nonsingular for stable inputs, but a
/// SingularMatrixError escapes if that degrades numerically.
Matrix laplace_cdf_at(const PhRepresentation& rep_s, const Matrix& m);

}  // namespace phtandem

#endif
