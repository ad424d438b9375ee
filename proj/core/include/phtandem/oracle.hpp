#ifndef PHTANDEM_ORACLE_HPP
#define PHTANDEM_ORACLE_HPP

#include <cstddef>
#include <functional>

#include "phtandem/matrix.hpp"
#include "phtandem/ph.hpp"
#include "phtandem/quadrature.hpp"
#include "phtandem/tandem.hpp"

namespace phtandem {

/// Scalar cdf used by the oracle integrands.
using CdfFn = std::function<double(double)>;

/// Independent evaluation of the blocking-weight defining integral,
///
///   r3 = - integral over [0, inf) of F_I2(x) a3' e^{A3 x} dx,
///
/// truncated at the generator's decay horizon and integrated by adaptive
/// Simpson, entrywise. Deliberately avoids the Kronecker and transform
/// kernels the algebraic solver is built on, so agreement between the two
/// is meaningful evidence.
Matrix oracle_r3(const CdfFn& f_i2, const PhRepresentation& s3,
                 const QuadratureConfig& cfg);

/// Same for the idle weights:
///   d2 = - integral over [0, inf) of F_S2(x) F_R3(x) a1' e^{A1 x} dx.
Matrix oracle_d2(const CdfFn& f_s2, const CdfFn& f_r3,
                 const PhRepresentation& s1, const QuadratureConfig& cfg);

struct FixedPointResult {
    Matrix r3;  // 1 x n3
    Matrix d2;  // 1 x n1
    std::size_t iterations = 0;
    double last_delta = 0.0;  // max vector change of the final sweep
};

/// Brute-force solve of the two coupled integral equations by fixed-point
/// iteration: start from r3 = a3 (no coupling), then alternate the two
/// oracle integrals, rebuilding the interim cdfs from the current weight
/// vectors, until the weights stop moving. No convergence guarantee is
/// known; exceeding cfg.fixed_point_max_iters throws ConvergenceError
/// carrying the last delta.
FixedPointResult fixed_point_solve(const TandemInputs& inputs,
                                   const QuadratureConfig& cfg);

}  // namespace phtandem

#endif
