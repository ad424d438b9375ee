#ifndef PHTANDEM_STABILITY_HPP
#define PHTANDEM_STABILITY_HPP

#include <complex>
#include <vector>

#include "phtandem/matrix.hpp"

namespace phtandem {

/// All eigenvalues of a square real matrix, by Householder Hessenberg
/// reduction followed by Francis double-shift QR iteration (at most 100*n
/// sweeps; non-convergence throws NumericError). Complex conjugate pairs
/// come from the 2x2 blocks of the real Schur form.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// Largest eigenvalue real part.
double spectral_abscissa(const Matrix& a);

/// True iff every eigenvalue real part is < -margin, so e^{ax} -> 0.
bool is_stable(const Matrix& a, double margin = 1e-10);

/// Integral of e^{ax} over [0, inf), which equals -a^{-1} for stable a.
/// Throws StabilityError when a is unstable or singular.
Matrix stable_integral(const Matrix& a);

}  // namespace phtandem

#endif
