#include "phtandem/lu.hpp"

#include <random>

#include "doctest.h"
#include "phtandem/errors.hpp"
#include "support/random_inputs.hpp"

using namespace phtandem;
using testsupport::random_matrix;
using testsupport::random_stable;

TEST_CASE("identity and diagonal systems") {
    Matrix rhs{{1.0}, {2.0}, {3.0}};
    CHECK(max_abs_diff(lu_solve(Matrix::identity(3), rhs), rhs) == 0.0);

    Matrix diag{{2.0, 0.0}, {0.0, 4.0}};
    Matrix b{{2.0}, {2.0}};
    CHECK(max_abs_diff(lu_solve(diag, b), Matrix{{1.0}, {0.5}}) <= 1e-15);
}

TEST_CASE("random well-conditioned systems have tiny residuals") {
    std::mt19937_64 rng(811);
    for (int rep = 0; rep < 20; ++rep) {
        Matrix a = random_stable(rng, 6);  // diagonally dominant
        Matrix b = random_matrix(rng, 6, 1, -2.0, 2.0);
        Matrix x = lu_solve(a, b);
        CHECK((a * x - b).max_abs() <= 1e-10);
    }
}

TEST_CASE("multi-column right-hand sides") {
    std::mt19937_64 rng(822);
    Matrix a = random_stable(rng, 4);
    Matrix b = random_matrix(rng, 4, 3);
    Matrix x = lu_solve(a, b);
    CHECK(x.cols() == 3);
    CHECK((a * x - b).max_abs() <= 1e-11);
}

TEST_CASE("row-vector systems solve through the transpose") {
    std::mt19937_64 rng(833);
    Matrix a = random_stable(rng, 5);
    Matrix rhs = random_matrix(rng, 1, 5);
    Matrix x = solve_row_system(a, rhs);
    CHECK(x.rows() == 1);
    CHECK((x * a - rhs).max_abs() <= 1e-11);
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(844);
    Matrix a = random_stable(rng, 4);
    Matrix inv = inverse(a);
    CHECK(max_abs_diff(a * inv, Matrix::identity(4)) <= 1e-12);
    CHECK(max_abs_diff(inv * a, Matrix::identity(4)) <= 1e-12);
}

TEST_CASE("singular matrices are refused with the pivot attached") {
    Matrix singular{{1.0, 2.0}, {2.0, 4.0}};
    bool thrown = false;
    try {
        LuFactorization f(singular, "test matrix");
    } catch (const SingularMatrixError& e) {
        thrown = true;
        CHECK(e.pivot >= 0.0);
        CHECK(std::string(e.what()).find("test matrix") != std::string::npos);
    }
    CHECK(thrown);
    CHECK_THROWS_AS(inverse(Matrix(3, 3)), SingularMatrixError);
}

TEST_CASE("condition estimate") {
    CHECK(LuFactorization(Matrix::identity(5)).condition_estimate() == 1.0);
    Matrix skewed{{1.0, 0.0}, {0.0, 1e-9}};
    CHECK(LuFactorization(skewed).condition_estimate() >= 1e8);
    std::mt19937_64 rng(855);
    LuFactorization f(random_stable(rng, 4));
    CHECK(f.min_pivot() > 0.0);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(LuFactorization(Matrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(lu_solve(Matrix::identity(2), Matrix(3, 1)), DimensionError);
}

TEST_CASE("pivoting handles a zero leading entry") {
    Matrix a{{0.0, 1.0}, {1.0, 0.0}};
    Matrix b{{2.0}, {3.0}};
    CHECK(max_abs_diff(lu_solve(a, b), Matrix{{3.0}, {2.0}}) == 0.0);
}
