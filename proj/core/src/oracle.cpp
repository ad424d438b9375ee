#include "phtandem/oracle.hpp"

#include <algorithm>

#include "phtandem/errors.hpp"
#include "phtandem/expm.hpp"

namespace phtandem {
namespace {

// Raw cdf 1 - w e^{Ax} u without clamping: interim weight vectors of the
// fixed-point iteration may leave [0,1] slightly, and the integrals must
// see those values as-is to converge.
CdfFn raw_cdf(const Matrix& weights, const Matrix& generator) {
    return [weights, generator](double x) {
        return 1.0 - (weights * expm(x * generator)).sum();
    };
}

// - integral of weight(x) * exit' e^{Ax} dx over [0, horizon].
Matrix weighted_exit_integral(const CdfFn& weight, const PhRepresentation& rep,
                              const QuadratureConfig& cfg) {
    const Matrix exit = rep.exit_vector();
    const Matrix& gen = rep.generator();
    const double horizon = truncation_horizon(gen, cfg.truncation_norm_tol);
    auto integrand = [&](double x) { return weight(x) * (exit * expm(x * gen)); };
    return -integrate(integrand, 0.0, horizon, cfg.abs_tol, cfg.max_subdivisions);
}

}  // namespace

Matrix oracle_r3(const CdfFn& f_i2, const PhRepresentation& s3,
                 const QuadratureConfig& cfg) {
    return weighted_exit_integral(f_i2, s3, cfg);
}

Matrix oracle_d2(const CdfFn& f_s2, const CdfFn& f_r3,
                 const PhRepresentation& s1, const QuadratureConfig& cfg) {
    auto product = [&f_s2, &f_r3](double x) { return f_s2(x) * f_r3(x); };
    return weighted_exit_integral(product, s1, cfg);
}

FixedPointResult fixed_point_solve(const TandemInputs& inputs,
                                   const QuadratureConfig& cfg) {
    const CdfFn f_s2 = raw_cdf(inputs.s2.init(), inputs.s2.generator());

    // Start from the uncoupled guess: blocking looks like the third
    // service itself, idleness not yet fed back.
    Matrix r3 = inputs.s3.init();
    Matrix d2(1, inputs.s1.order());
    double delta = 0.0;

    for (std::size_t iter = 1; iter <= cfg.fixed_point_max_iters; ++iter) {
        const Matrix d2_next =
            oracle_d2(f_s2, raw_cdf(r3, inputs.s3.generator()), inputs.s1, cfg);
        const Matrix r3_next =
            oracle_r3(raw_cdf(d2_next, inputs.s1.generator()), inputs.s3, cfg);
        delta = std::max(max_abs_diff(r3_next, r3), max_abs_diff(d2_next, d2));
        r3 = r3_next;
        d2 = d2_next;
        if (delta <= cfg.fixed_point_tol)
            return {r3, d2, iter, delta};
    }
    throw ConvergenceError("fixed_point_solve: iteration did not converge", delta);
}

}  // namespace phtandem
