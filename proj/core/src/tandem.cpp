#include "phtandem/tandem.hpp"

#include <algorithm>
#include <string>

#include "phtandem/errors.hpp"
#include "phtandem/kronecker.hpp"
#include "phtandem/laplace.hpp"
#include "phtandem/lu.hpp"

namespace phtandem {
namespace {

constexpr double kClosureOkTol = 1e-9;     // weights count as probabilities
constexpr double kClosureAbortTol = 1e-6;  // beyond this the solve is broken

CdfLaplaceFn transform_of(const PhRepresentation& s2) {
    return [&s2](const Matrix& m) { return laplace_cdf_at(s2, m); };
}

void require_valid(const PhRepresentation& rep, const char* name) {
    const ValidationReport report = validate(rep);
    if (!report.ok)
        throw ValidationError(std::string(name) + ": " + report.violation);
}

void require_valid(const TandemInputs& inputs) {
    require_valid(inputs.s1, "s1");
    require_valid(inputs.s2, "s2");
    require_valid(inputs.s3, "s3");
}

Matrix build_b_impl(const PhRepresentation& s1, const PhRepresentation& s3,
                    const Matrix& a13) {
    const std::size_t n1 = s1.order();
    const std::size_t n3 = s3.order();
    // (I (x) a3') A13^{-1} (u1 (x) I): one multi-column solve, two thin products.
    const Matrix rhs = kron_product(Matrix::unit_column(n1), Matrix::identity(n3));
    const Matrix solved = lu_solve(a13, rhs);
    return kron_product(Matrix::identity(n1), s3.exit_vector()) * solved;
}

Matrix build_c_impl(const PhRepresentation& s1, const CdfLaplaceFn& transform,
                    const PhRepresentation& s3, const Matrix& a31) {
    const std::size_t n1 = s1.order();
    const std::size_t n3 = s3.order();
    const Matrix t31 = transform(a31);
    return kron_product(Matrix::identity(n3), s1.exit_vector()) * t31 *
           kron_product(Matrix::unit_column(n3), Matrix::identity(n1));
}

double closure_excess(const Matrix& weights) {
    double excess = 0.0;
    for (std::size_t j = 0; j < weights.cols(); ++j) {
        excess = std::max(excess, -weights(0, j));
        excess = std::max(excess, weights(0, j) - 1.0);
    }
    excess = std::max(excess, weights.sum() - 1.0);
    return std::max(excess, 0.0);
}

}  // namespace

Matrix build_b(const PhRepresentation& s1, const PhRepresentation& s3) {
    return build_b_impl(s1, s3, kron_sum(s1.generator(), s3.generator()));
}

Matrix build_c(const PhRepresentation& s1, const PhRepresentation& s2,
               const PhRepresentation& s3) {
    return build_c_impl(s1, transform_of(s2), s3,
                        kron_sum(s3.generator(), s1.generator()));
}

std::pair<Matrix, Matrix> build_g(const PhRepresentation& s1,
                                  const PhRepresentation& s2,
                                  const PhRepresentation& s3,
                                  const Matrix& b, const Matrix& c) {
    const Matrix g_matrix = Matrix::identity(s3.order()) + c * b;
    const Matrix lead = s1.exit_vector() * laplace_cdf_at(s2, s1.generator());
    const Matrix g_vector = s3.init() + lead * b;
    return {g_matrix, g_vector};
}

std::size_t complexity_report(const TandemInputs& inputs) {
    return std::min(inputs.s1.order(), inputs.s3.order());
}

TandemSolution solve_with_transform(const PhRepresentation& s1,
                                    const CdfLaplaceFn& s2_transform,
                                    const PhRepresentation& s3,
                                    SolvePath path,
                                    bool enforce_weight_bounds) {
    const std::size_t n1 = s1.order();
    const std::size_t n3 = s3.order();

    SolverWorkspace ws;
    ws.a13 = kron_sum(s1.generator(), s3.generator());
    ws.a31 = kron_sum(s3.generator(), s1.generator());
    ws.b = build_b_impl(s1, s3, ws.a13);
    ws.c = build_c_impl(s1, s2_transform, s3, ws.a31);
    ws.laplace_at_a1 = s2_transform(s1.generator());

    // a1' T(A1), the inhomogeneous row of the idle-weight equation.
    const Matrix lead = s1.exit_vector() * ws.laplace_at_a1;
    ws.g_matrix = Matrix::identity(n3) + ws.c * ws.b;
    ws.g_vector = s3.init() + lead * ws.b;

    Matrix r3;
    Matrix d2;
    double condition = 0.0;

    if (path == SolvePath::combined) {
        // One block system over both weight vectors:
        //   [d2, r3] [[B, I], [I, -C]] = [a3, -a1' T(A1)].
        const std::size_t total = n1 + n3;
        Matrix block(total, total);
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n3; ++j) block(i, j) = ws.b(i, j);
            block(i, n3 + i) = 1.0;
        }
        for (std::size_t i = 0; i < n3; ++i) {
            block(n1 + i, i) = 1.0;
            for (std::size_t j = 0; j < n1; ++j)
                block(n1 + i, n3 + j) = -ws.c(i, j);
        }
        Matrix rhs(1, total);
        for (std::size_t j = 0; j < n3; ++j) rhs(0, j) = s3.init()(0, j);
        for (std::size_t j = 0; j < n1; ++j) rhs(0, n3 + j) = -lead(0, j);

        const LuFactorization factor(block.transpose(), "combined block system");
        const Matrix sol = factor.solve(rhs.transpose()).transpose();
        condition = factor.condition_estimate();
        d2 = Matrix(1, n1);
        r3 = Matrix(1, n3);
        for (std::size_t j = 0; j < n1; ++j) d2(0, j) = sol(0, j);
        for (std::size_t j = 0; j < n3; ++j) r3(0, j) = sol(0, n1 + j);
    } else if (n1 < n3) {
        // Eliminate r3 = a3 - d2 B first, leaving an order-n1 system
        // d2 (I + B C) = -a1' T(A1) + a3 C for the idle weights.
        const Matrix reduced = Matrix::identity(n1) + ws.b * ws.c;
        const Matrix rhs = -lead + s3.init() * ws.c;
        const LuFactorization factor(reduced.transpose(), "idle-weight system");
        d2 = factor.solve(rhs.transpose()).transpose();
        condition = factor.condition_estimate();
        r3 = s3.init() - d2 * ws.b;
    } else {
        // Eliminate d2 first: r3 (I + C B) = a3 + a1' T(A1) B, order n3.
        const LuFactorization factor(ws.g_matrix.transpose(), "blocking-weight system");
        r3 = factor.solve(ws.g_vector.transpose()).transpose();
        condition = factor.condition_estimate();
        d2 = -lead + r3 * ws.c;
    }

    r3.ensure_finite("solver r3");
    d2.ensure_finite("solver d2");

    const double residual_r3 = (d2 * ws.b + r3 - s3.init()).max_abs();
    const double residual_d2 = (d2 - r3 * ws.c + lead).max_abs();

    const double violation = std::max(closure_excess(r3), closure_excess(d2));
    if (enforce_weight_bounds && violation > kClosureAbortTol)
        throw NumericError(
            "solver: solution weights leave [0, 1] beyond tolerance; "
            "inputs are inconsistent or the system is numerically broken");

    return TandemSolution{
        .r3 = r3,
        .d2 = d2,
        .rep_r3 = PhRepresentation(r3, s3.generator(), s3.dist_class()),
        .rep_i2 = PhRepresentation(d2, s1.generator(), s1.dist_class()),
        .workspace = std::move(ws),
        .residual_r3_equation = residual_r3,
        .residual_d2_equation = residual_d2,
        .condition_estimate = condition,
        .closure_violation = violation,
        .closure_ok = violation <= kClosureOkTol,
    };
}

TandemSolution solve_closed_form(const TandemInputs& inputs) {
    require_valid(inputs);
    const bool all_ph = inputs.s1.dist_class() == DistClass::ph &&
                        inputs.s2.dist_class() == DistClass::ph &&
                        inputs.s3.dist_class() == DistClass::ph;
    return solve_with_transform(inputs.s1, transform_of(inputs.s2), inputs.s3,
                                SolvePath::closed_form, all_ph);
}

TandemSolution solve_combined(const TandemInputs& inputs) {
    require_valid(inputs);
    const bool all_ph = inputs.s1.dist_class() == DistClass::ph &&
                        inputs.s2.dist_class() == DistClass::ph &&
                        inputs.s3.dist_class() == DistClass::ph;
    return solve_with_transform(inputs.s1, transform_of(inputs.s2), inputs.s3,
                                SolvePath::combined, all_ph);
}

}  // namespace phtandem
