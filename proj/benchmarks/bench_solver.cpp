// Microbenchmarks for the solver's hot kernels, sized like the systems the
// solver actually factors (Kronecker sums of small phase-type generators).

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "phtandem/expm.hpp"
#include "phtandem/kronecker.hpp"
#include "phtandem/laplace.hpp"
#include "phtandem/lu.hpp"
#include "phtandem/problem_io.hpp"
#include "phtandem/tandem.hpp"

namespace {

using namespace phtandem;

Matrix random_stable(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            m(i, j) = 2.0 * unit(rng) - 1.0;
            radius += std::abs(m(i, j));
        }
        m(i, i) = -(radius + 0.2 + unit(rng));
    }
    return m;
}

TandemInputs worked_inputs() {
    const ProblemFile p =
        load_problem(std::string(PHTANDEM_DATA_DIR) + "/worked_example.json");
    return {p.s1, p.s2, p.s3};
}

void BM_expm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Matrix a = random_stable(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_expm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_kron_sum(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Matrix a = random_stable(rng, state.range(0));
    const Matrix b = random_stable(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kron_sum(a, b));
}
BENCHMARK(BM_kron_sum)->Arg(2)->Arg(4)->Arg(8);

void BM_lu_solve_kron_sum(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const std::size_t n = state.range(0);
    const Matrix system = kron_sum(random_stable(rng, n), random_stable(rng, n));
    const Matrix rhs = kron_product(Matrix::unit_column(n), Matrix::identity(n));
    for (auto _ : state) benchmark::DoNotOptimize(lu_solve(system, rhs));
}
BENCHMARK(BM_lu_solve_kron_sum)->Arg(2)->Arg(4)->Arg(8);

void BM_cdf_transform(benchmark::State& state) {
    const TandemInputs inputs = worked_inputs();
    const Matrix a31 = kron_sum(inputs.s3.generator(), inputs.s1.generator());
    for (auto _ : state) benchmark::DoNotOptimize(laplace_cdf_at(inputs.s2, a31));
}
BENCHMARK(BM_cdf_transform);

void BM_solve_closed_form(benchmark::State& state) {
    const TandemInputs inputs = worked_inputs();
    for (auto _ : state) benchmark::DoNotOptimize(solve_closed_form(inputs));
}
BENCHMARK(BM_solve_closed_form);

void BM_solve_combined(benchmark::State& state) {
    const TandemInputs inputs = worked_inputs();
    for (auto _ : state) benchmark::DoNotOptimize(solve_combined(inputs));
}
BENCHMARK(BM_solve_combined);

}  // namespace

BENCHMARK_MAIN();
