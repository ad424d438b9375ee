#include "phtandem/ph.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "phtandem/errors.hpp"
#include "phtandem/expm.hpp"
#include "phtandem/lu.hpp"
#include "phtandem/stability.hpp"

namespace phtandem {
namespace {

constexpr double kProbTol = 1e-10;   // bounds on probabilities
constexpr double kStructTol = 1e-9;  // sign/row-sum structure of generators

std::string indexed(const char* fmt, std::size_t i) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, static_cast<unsigned long>(i));
    return buf;
}

// Stability doubles as the nonsingularity check: a stable generator has no
// eigenvalue at zero. Eigenvalue-iteration failures count as violations
// rather than exceptions, since validate() must not throw.
bool stable_generator(const Matrix& a, std::string& violation) {
    try {
        if (!is_stable(a)) {
            violation = "generator is not stable (an eigenvalue real part is >= 0)";
            return false;
        }
    } catch (const NumericError&) {
        violation = "generator eigenvalue iteration did not converge";
        return false;
    }
    return true;
}

ValidationReport fail(std::string violation) {
    return {false, std::move(violation)};
}

ValidationReport validate_ph(const PhRepresentation& rep) {
    const Matrix& a = rep.init();
    const Matrix& gen = rep.generator();
    const std::size_t n = rep.order();
    for (std::size_t i = 0; i < n; ++i) {
        if (a(0, i) < -kProbTol || a(0, i) > 1.0 + kProbTol)
            return fail(indexed("init entry %lu is outside [0, 1]", i));
    }
    if (a.sum() > 1.0 + kProbTol)
        return fail("init mass a*u exceeds 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (gen(i, i) >= 0.0)
            return fail(indexed("generator diagonal entry %lu is not negative", i));
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && gen(i, j) < -kStructTol)
                return fail(indexed("generator row %lu has a negative off-diagonal rate", i));
            row_sum += gen(i, j);
        }
        if (row_sum > kStructTol)
            return fail(indexed("generator row %lu sums to a positive value", i));
    }
    std::string violation;
    if (!stable_generator(gen, violation)) return fail(std::move(violation));
    return {};
}

ValidationReport validate_me(const PhRepresentation& rep) {
    const double mass = rep.init().sum();
    if (mass < -kProbTol || mass > 1.0 + kProbTol)
        return fail("init mass a*u is outside [0, 1]");
    std::string violation;
    if (!stable_generator(rep.generator(), violation)) return fail(std::move(violation));
    const double absorption = -rep.exit_vector().sum();
    if (absorption < -kStructTol)
        return fail("total absorption rate -a A u is negative");
    return {};
}

// a e^{At} u with the exponential evaluated once.
double init_expm_mass(const PhRepresentation& rep, double t) {
    const Matrix e = expm(t * rep.generator());
    return (rep.init() * e).sum();
}

}  // namespace

PhRepresentation::PhRepresentation(Matrix init, Matrix generator, DistClass dist_class)
    : init_(std::move(init)), generator_(std::move(generator)), dist_class_(dist_class) {
    if (init_.rows() != 1 || init_.cols() == 0)
        throw DimensionError("PhRepresentation: init must be a nonempty row vector");
    if (generator_.rows() != init_.cols() || generator_.cols() != init_.cols())
        throw DimensionError("PhRepresentation: generator must be square of the init's order");
}

ValidationReport validate(const PhRepresentation& rep) {
    return rep.dist_class() == DistClass::ph ? validate_ph(rep) : validate_me(rep);
}

double cdf(const PhRepresentation& rep, double t) {
    if (t < 0.0) throw DomainError("cdf: negative time");
    const double value = 1.0 - init_expm_mass(rep, t);
    if (value < 0.0) {
        if (value < -kProbTol) throw NumericError("cdf: value drifted below 0");
        return 0.0;
    }
    if (value > 1.0) {
        if (value > 1.0 + kProbTol) throw NumericError("cdf: value drifted above 1");
        return 1.0;
    }
    return value;
}

DensityValue density(const PhRepresentation& rep, double t) {
    if (t < 0.0) throw DomainError("density: negative time");
    const Matrix e = expm(t * rep.generator());
    double continuous = -(rep.exit_vector() * e).sum();
    if (continuous < 0.0) {
        if (continuous < -1e-12) throw NumericError("density: negative continuous part");
        continuous = 0.0;
    }
    return {continuous, rep.atom_at_zero()};
}

double mean(const PhRepresentation& rep) {
    // -a A^{-1} u, via one solve of A x = u.
    const Matrix x = lu_solve(rep.generator(), Matrix::unit_column(rep.order()));
    return -(rep.init() * x).sum();
}

}  // namespace phtandem
