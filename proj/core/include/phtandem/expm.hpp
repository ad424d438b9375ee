#ifndef PHTANDEM_EXPM_HPP
#define PHTANDEM_EXPM_HPP

#include "phtandem/matrix.hpp"

namespace phtandem {

/// Matrix exponential e^a by scaling and squaring with a degree-13 diagonal
/// Pade approximant, scaled so the reduced matrix has inf-norm <= 0.5.
/// Throws DimensionError on a non-square input and NumericError if the
/// result overflows to non-finite values.
Matrix expm(const Matrix& a);

}  // namespace phtandem

#endif
