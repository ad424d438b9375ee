#include "phtandem/ph.hpp"

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "phtandem/errors.hpp"
#include "phtandem/quadrature.hpp"
#include "phtandem/stability.hpp"
#include "support/random_inputs.hpp"
#include "support/worked_example.hpp"

using namespace phtandem;

namespace {

PhRepresentation exponential(double rate) {
    return PhRepresentation(Matrix{{1.0}}, Matrix{{-rate}});
}

PhRepresentation erlang4(double rate) {
    Matrix gen(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        gen(i, i) = -rate;
        if (i + 1 < 4) gen(i, i + 1) = rate;
    }
    return PhRepresentation(Matrix::row_vector({1.0, 0.0, 0.0, 0.0}), gen);
}

bool mentions(const ValidationReport& report, const char* word) {
    return !report.ok && report.violation.find(word) != std::string::npos;
}

}  // namespace

TEST_CASE("construction rejects mismatched shapes") {
    CHECK_THROWS_AS(PhRepresentation(Matrix{{1.0, 0.0}}, Matrix{{-1.0}}), DimensionError);
    CHECK_THROWS_AS(PhRepresentation(Matrix(2, 1, {1.0, 0.0}), Matrix::identity(2)),
                    DimensionError);
    CHECK_THROWS_AS(PhRepresentation(Matrix{{1.0}}, Matrix(1, 2)), DimensionError);
}

TEST_CASE("derived quantities of a simple representation") {
    PhRepresentation rep(Matrix{{0.5, 0.3}}, Matrix{{-2.0, 1.0}, {0.0, -3.0}});
    CHECK(rep.order() == 2);
    CHECK(rep.atom_at_zero() == doctest::Approx(0.2).epsilon(1e-12));
    Matrix exit = rep.exit_vector();
    CHECK(exit(0, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(exit(0, 1) == doctest::Approx(-0.4).epsilon(1e-12));
}

TEST_CASE("validation accepts proper representations") {
    CHECK(validate(exponential(2.0)).ok);
    const TandemInputs worked = testsupport::worked_example();
    CHECK(validate(worked.s1).ok);
    CHECK(validate(worked.s2).ok);
    CHECK(validate(worked.s3).ok);
}

TEST_CASE("valid representations absorb at a nonnegative total rate") {
    // -a A u >= 0 follows from the sign structure; it is what makes the
    // density nonnegative at zero.
    std::mt19937_64 rng(403);
    for (int rep_ix = 0; rep_ix < 20; ++rep_ix) {
        PhRepresentation rep = testsupport::random_ph(rng, 4);
        REQUIRE(validate(rep).ok);
        CHECK(-rep.exit_vector().sum() >= 0.0);
    }
}

TEST_CASE("sign-structure violations are named") {
    // Positive diagonal entry.
    PhRepresentation pos_diag(Matrix{{1.0}}, Matrix{{2.0}});
    CHECK(mentions(validate(pos_diag), "diagonal"));

    // Negative off-diagonal rate.
    PhRepresentation neg_rate(Matrix{{0.5, 0.5}}, Matrix{{-1.0, -0.5}, {0.0, -1.0}});
    CHECK(mentions(validate(neg_rate), "off-diagonal"));

    // Positive row sum (a net source).
    PhRepresentation source(Matrix{{0.5, 0.5}}, Matrix{{-1.0, 2.0}, {0.0, -1.0}});
    CHECK(mentions(validate(source), "sums"));

    // Init entries must be probabilities.
    PhRepresentation neg_init(Matrix{{-0.2, 0.5}}, Matrix{{-1.0, 0.0}, {0.0, -1.0}});
    CHECK(mentions(validate(neg_init), "init entry"));
    PhRepresentation heavy(Matrix{{0.9, 0.9}}, Matrix{{-1.0, 0.0}, {0.0, -1.0}});
    CHECK(mentions(validate(heavy), "mass"));

    // Unstable generator.
    PhRepresentation unstable(Matrix{{1.0, 0.0}}, Matrix{{-1.0, 1.0}, {1.0, -1.0}});
    CHECK(mentions(validate(unstable), "stable"));
}

TEST_CASE("the matrix-exponential class relaxes the sign rules") {
    const TandemInputs worked = testsupport::worked_example();
    // The middle block's row 3 sums to +0.4897; as strict phase-type it fails…
    PhRepresentation strict(worked.s2.init(), worked.s2.generator(), DistClass::ph);
    CHECK(mentions(validate(strict), "row"));
    // …but the relaxed class accepts it.
    CHECK(validate(worked.s2).ok);

    // The relaxed class still demands nonnegative total absorption.
    PhRepresentation bad_absorb(Matrix{{1.0, 0.0}}, Matrix{{-1.0, 2.0}, {0.0, -1.0}},
                                DistClass::me);
    CHECK(mentions(validate(bad_absorb), "absorption"));
    // And stability.
    PhRepresentation me_unstable(Matrix{{1.0}}, Matrix{{0.5}}, DistClass::me);
    CHECK(mentions(validate(me_unstable), "stable"));
    // And bounded mass.
    PhRepresentation me_heavy(Matrix{{1.5}}, Matrix{{-1.0}}, DistClass::me);
    CHECK(mentions(validate(me_heavy), "mass"));
}

TEST_CASE("cdf of the exponential distribution") {
    PhRepresentation rep = exponential(1.0);
    CHECK(cdf(rep, 0.0) == 0.0);
    CHECK(cdf(rep, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(cdf(rep, 30.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(cdf(rep, -0.1), DomainError);
}

TEST_CASE("cdf at zero equals the atom") {
    const TandemInputs worked = testsupport::worked_example();
    CHECK(cdf(worked.s1, 0.0) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(cdf(worked.s3, 0.0) == 0.0);
}

TEST_CASE("four stages in series match the closed-form gamma tail") {
    PhRepresentation rep = erlang4(4.0);
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
        double tail = 0.0;
        double term = 1.0;
        for (int j = 0; j < 4; ++j) {
            tail += term;
            term *= 4.0 * t / (j + 1);
        }
        tail *= std::exp(-4.0 * t);
        CHECK(cdf(rep, t) == doctest::Approx(1.0 - tail).epsilon(1e-10));
    }
    CHECK(cdf(rep, 1.0) == doctest::Approx(0.56652988).epsilon(1e-7));
}

TEST_CASE("density splits the atom from the continuous part") {
    DensityValue at0 = density(exponential(1.0), 0.0);
    CHECK(at0.continuous_part == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at0.point_mass_at_zero == 0.0);

    const TandemInputs worked = testsupport::worked_example();
    DensityValue s1_at0 = density(worked.s1, 0.0);
    CHECK(s1_at0.point_mass_at_zero == doctest::Approx(0.2).epsilon(1e-12));
    CHECK_THROWS_AS(density(worked.s1, -1.0), DomainError);
}

TEST_CASE("the continuous density integrates to the non-atom mass") {
    const TandemInputs worked = testsupport::worked_example();
    const PhRepresentation& rep = worked.s1;
    const double horizon = truncation_horizon(rep.generator(), 1e-12);
    const double total = integrate(
        [&](double t) { return density(rep, t).continuous_part; }, 0.0, horizon, 1e-9,
        std::size_t{1} << 16);
    CHECK(total == doctest::Approx(0.8).epsilon(1e-6));
}

TEST_CASE("mean of known distributions") {
    CHECK(mean(exponential(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mean(erlang4(4.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mean agrees with the integrated survival function") {
    std::mt19937_64 rng(404);
    for (int rep_ix = 0; rep_ix < 5; ++rep_ix) {
        PhRepresentation rep = testsupport::random_ph(rng, 3);
        REQUIRE(validate(rep).ok);
        const double horizon = truncation_horizon(rep.generator(), 1e-13);
        const double by_quadrature =
            integrate([&](double t) { return 1.0 - cdf(rep, t); }, 0.0, horizon, 1e-9,
                      std::size_t{1} << 16);
        CHECK(std::abs(mean(rep) - by_quadrature) <= 1e-6);
    }
}

TEST_CASE("cdf is nondecreasing and reaches one") {
    std::mt19937_64 rng(405);
    for (int rep_ix = 0; rep_ix < 5; ++rep_ix) {
        PhRepresentation rep = testsupport::random_ph(rng, 4);
        const double t_max = 40.0 / std::abs(spectral_abscissa(rep.generator()));
        double prev = -1.0;
        for (int k = 0; k <= 200; ++k) {
            const double value = cdf(rep, t_max * k / 200.0);
            CHECK(value >= prev - 1e-10);
            prev = value;
        }
        CHECK(prev >= 1.0 - 1e-6);
    }
}
