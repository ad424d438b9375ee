#ifndef PHTANDEM_QUADRATURE_HPP
#define PHTANDEM_QUADRATURE_HPP

#include <cstddef>
#include <functional>

#include "phtandem/matrix.hpp"

namespace phtandem {

/// Tolerances and budgets shared by the quadrature routines and the
/// integral-equation cross-checks built on top of them.
struct QuadratureConfig {
    double abs_tol = 1e-9;
    double truncation_norm_tol = 1e-12;
    std::size_t max_subdivisions = std::size_t{1} << 16;
    double fixed_point_tol = 1e-8;
    std::size_t fixed_point_max_iters = 500;
};

/// Smallest time T (located by doubling then bisection) with
/// ||e^{aT}||_inf <= tol, so integrals of decaying matrix exponentials can
/// be truncated to [0, T]. Throws StabilityError if the norm has not
/// dropped below tol by T = 2^30.
double truncation_horizon(const Matrix& a, double tol);

/// Adaptive Simpson integration of a matrix-valued function over [t0, t1],
/// bisecting intervals until the Richardson error estimate is below
/// abs_tol (distributed across subintervals). Componentwise: an interval
/// is accepted only when every entry's estimate is small enough. Throws
/// AccuracyError with the achieved error estimate when the subdivision
/// budget runs out first.
Matrix integrate(const std::function<Matrix(double)>& f, double t0, double t1,
                 double abs_tol, std::size_t max_subdivisions);

/// Scalar convenience wrapper around the matrix version.
double integrate(const std::function<double(double)>& f, double t0, double t1,
                 double abs_tol, std::size_t max_subdivisions);

}  // namespace phtandem

#endif
