#include "phtandem/laplace.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "phtandem/errors.hpp"
#include "phtandem/expm.hpp"
#include "phtandem/kronecker.hpp"
#include "phtandem/quadrature.hpp"
#include "support/random_inputs.hpp"
#include "support/worked_example.hpp"

using namespace phtandem;

namespace {

constexpr std::size_t kBudget = std::size_t{1} << 16;

// Reference value by direct numerical integration of e^{mx} F(x).
Matrix by_quadrature(const PhRepresentation& rep, const Matrix& m) {
    const double horizon = truncation_horizon(m, 1e-13);
    return integrate([&](double x) { return cdf(rep, x) * expm(x * m); }, 0.0, horizon,
                     1e-10, kBudget);
}

}  // namespace

TEST_CASE("scalar argument against exponential closed forms") {
    PhRepresentation exp1(Matrix{{1.0}}, Matrix{{-1.0}});
    // integral of e^{-x}(1 - e^{-x}) = 1 - 1/2
    Matrix t1 = laplace_cdf_at(exp1, Matrix{{-1.0}});
    CHECK(t1.rows() == 1);
    CHECK(t1.cols() == 1);
    CHECK(t1(0, 0) == doctest::Approx(0.5).epsilon(1e-12));

    PhRepresentation exp3(Matrix{{1.0}}, Matrix{{-3.0}});
    // integral of e^{-2x}(1 - e^{-3x}) = 1/2 - 1/5
    Matrix t2 = laplace_cdf_at(exp3, Matrix{{-2.0}});
    CHECK(t2(0, 0) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("scalar argument against direct integration") {
    std::mt19937_64 rng(501);
    const PhRepresentation random_rep = testsupport::random_ph(rng, 3);
    const TandemInputs worked = testsupport::worked_example();
    for (const PhRepresentation* rep : {&random_rep, &worked.s2}) {
        for (double s : {0.5, 1.0, 2.0}) {
            const Matrix m{{-s}};
            const double closed = laplace_cdf_at(*rep, m)(0, 0);
            const double numeric = by_quadrature(*rep, m)(0, 0);
            CHECK(std::abs(closed - numeric) <= 1e-7);
        }
    }
}

TEST_CASE("matrix argument against direct integration") {
    const TandemInputs worked = testsupport::worked_example();
    const Matrix a1 = worked.s1.generator();
    const Matrix a31 = kron_sum(worked.s3.generator(), a1);
    for (const Matrix* m : {&a1, &a31}) {
        const Matrix closed = laplace_cdf_at(worked.s2, *m);
        REQUIRE(closed.rows() == m->rows());
        REQUIRE(closed.cols() == m->cols());
        CHECK(max_abs_diff(closed, by_quadrature(worked.s2, *m)) <= 1e-7);
    }
}

TEST_CASE("result shape follows the argument, not the distribution") {
    const TandemInputs worked = testsupport::worked_example();
    Matrix m{{-2.0, 1.0}, {0.0, -1.0}};
    Matrix value = laplace_cdf_at(worked.s2, m);
    CHECK(value.rows() == 2);
    CHECK(value.cols() == 2);
}

TEST_CASE("unstable or malformed arguments are rejected") {
    PhRepresentation exp1(Matrix{{1.0}}, Matrix{{-1.0}});
    CHECK_THROWS_AS(laplace_cdf_at(exp1, Matrix{{0.0}}), StabilityError);
    CHECK_THROWS_AS(laplace_cdf_at(exp1, Matrix{{1.0}}), StabilityError);
    CHECK_THROWS_AS(laplace_cdf_at(exp1, Matrix(2, 3)), DimensionError);
}
