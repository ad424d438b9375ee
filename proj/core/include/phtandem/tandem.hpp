#ifndef PHTANDEM_TANDEM_HPP
#define PHTANDEM_TANDEM_HPP

#include <cstddef>
#include <functional>
#include <utility>

#include "phtandem/matrix.hpp"
#include "phtandem/ph.hpp"

namespace phtandem {

/// Service-time representations of the three servers in line. The third
/// server's finished jobs can block the middle one (blocking time R3), and
/// the first server's slow arrivals can starve it (idle time I2); solving
/// the line means finding the weight vectors of those two distributions.
struct TandemInputs {
    PhRepresentation s1;
    PhRepresentation s2;
    PhRepresentation s3;
};

/// The middle server enters the solution only through the Laplace
/// transform of its service cdf at a matrix argument: m -> integral of
/// e^{mx} F_S2(x) dx. The solver core takes that map as a callback, which
/// keeps the "any middle distribution with the same transform gives the
/// same answer" property structural.
using CdfLaplaceFn = std::function<Matrix(const Matrix&)>;

/// Intermediate matrices of a solve, kept for reporting and cross-checks.
struct SolverWorkspace {
    Matrix a13;            // kron_sum(A1, A3)
    Matrix a31;            // kron_sum(A3, A1)
    Matrix b;              // n1 x n3 coupling of idle weights into the blocking equation
    Matrix c;              // n3 x n1 coupling of blocking weights into the idle equation
    Matrix g_matrix;       // I + C*B, the eliminated blocking-weight system
    Matrix g_vector;       // a3 + a1' T(A1) B, its right-hand side
    Matrix laplace_at_a1;  // T(A1), the middle-server transform at the first generator
};

/// Solution of the line: blocking-time weights r3 (the distribution is
/// (n3, r3, A3)) and idle-time weights d2 (the distribution is (n1, d2, A1)).
struct TandemSolution {
    Matrix r3;  // 1 x n3
    Matrix d2;  // 1 x n1
    PhRepresentation rep_r3;
    PhRepresentation rep_i2;
    SolverWorkspace workspace;
    /// Max-abs residual of d2*B + r3 - a3 = 0 (the blocking-weight equation).
    double residual_r3_equation = 0.0;
    /// Max-abs residual of d2 - r3*C + a1' T(A1) = 0 (the idle-weight equation).
    double residual_d2_equation = 0.0;
    /// Condition estimate of the linear system actually solved; values
    /// above 1e8 deserve a warning.
    double condition_estimate = 0.0;
    /// Largest excursion of r3/d2 entries (and their sums) outside [0, 1].
    double closure_violation = 0.0;
    /// True when the weights are probabilities up to 1e-9 slack.
    bool closure_ok = true;
};

enum class SolvePath { closed_form, combined };

/// B = (I (x) a3') (A1 (+) A3)^{-1} (u1 (x) I), the n1 x n3 matrix through
/// which the idle weights enter the blocking-weight balance.
Matrix build_b(const PhRepresentation& s1, const PhRepresentation& s3);

/// C = (I (x) a1') T(A3 (+) A1) (u3 (x) I), the n3 x n1 matrix through
/// which the blocking weights enter the idle-weight balance; T is the
/// middle-server cdf transform.
Matrix build_c(const PhRepresentation& s1, const PhRepresentation& s2,
               const PhRepresentation& s3);

/// The eliminated blocking-weight system: G = I + C*B and its right-hand
/// side g = a3 + a1' T(A1) B. Expects b, c built from the same inputs.
std::pair<Matrix, Matrix> build_g(const PhRepresentation& s1,
                                  const PhRepresentation& s2,
                                  const PhRepresentation& s3,
                                  const Matrix& b, const Matrix& c);

/// Size of the smaller eliminated system, min(n1, n3): the elimination
/// order is chosen so only a system of this order is ever factored.
std::size_t complexity_report(const TandemInputs& inputs);

/// Solve by elimination: factor the order-min(n1,n3) reduced system, then
/// recover the other weight vector by back-substitution. Throws
/// SingularMatrixError when the reduced system is singular and
/// ValidationError when an input fails its class rules.
TandemSolution solve_closed_form(const TandemInputs& inputs);

/// Solve the full (n1+n3)-order block system in one factorization. Agrees
/// with solve_closed_form to 1e-9 whenever both succeed.
TandemSolution solve_combined(const TandemInputs& inputs);

/// Core entry point: the middle server appears only as its transform.
/// enforce_weight_bounds aborts (NumericError) when solution weights leave
/// [0, 1] by more than 1e-6 — wanted for genuinely phase-type inputs,
/// where the bounds are guaranteed; matrix-exponential inputs pass false
/// and read closure_violation instead.
TandemSolution solve_with_transform(const PhRepresentation& s1,
                                    const CdfLaplaceFn& s2_transform,
                                    const PhRepresentation& s3,
                                    SolvePath path,
                                    bool enforce_weight_bounds);

}  // namespace phtandem

#endif
