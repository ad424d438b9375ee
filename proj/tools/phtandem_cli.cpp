// Command-line front end for the three-server tandem solver: reads a JSON
// problem file, solves for the blocking-time and idle-time weight vectors,
// and reports the coupling matrices, residual diagnostics, oracle deltas,
// and cdf grids. `--selftest` runs the built-in worked example plus a
// randomized cross-check suite.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phtandem/errors.hpp"
#include "phtandem/matrix.hpp"
#include "phtandem/oracle.hpp"
#include "phtandem/ph.hpp"
#include "phtandem/problem_io.hpp"
#include "phtandem/tandem.hpp"

namespace {

using namespace phtandem;

// ---------------------------------------------------------------------------
// formatting

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string row_text(const Matrix& m, std::size_t i) {
    std::string out = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out += ", ";
        out += fmt("%.6f", m(i, j));
    }
    return out + "]";
}

void print_vector(std::ostream& out, const char* name, const Matrix& v) {
    out << name << " = " << row_text(v, 0) << "\n";
}

void print_matrix(std::ostream& out, const char* name, const Matrix& m) {
    out << name << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        out << "  " << row_text(m, i) << "\n";
}

// ---------------------------------------------------------------------------
// randomized cross-check inputs

PhRepresentation random_ph(std::mt19937_64& rng, std::size_t order) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix gen(order, order);
    for (std::size_t i = 0; i < order; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < order; ++j) {
            if (j == i) continue;
            gen(i, j) = 2.0 * unit(rng);
            off += gen(i, j);
        }
        // Strictly negative row sum keeps the generator stable with margin.
        gen(i, i) = -(off + 0.3 + 1.2 * unit(rng));
    }
    std::vector<double> a(order);
    double raw = 0.0;
    for (double& x : a) {
        x = unit(rng) + 1e-3;
        raw += x;
    }
    const double mass = 0.5 + 0.5 * unit(rng);  // leave room for an atom at 0
    for (double& x : a) x *= mass / raw;
    return {Matrix::row_vector(std::move(a)), std::move(gen), DistClass::ph};
}

TandemInputs random_triple(std::mt19937_64& rng, std::size_t max_order) {
    std::uniform_int_distribution<std::size_t> pick(1, max_order);
    return {random_ph(rng, pick(rng)), random_ph(rng, pick(rng)),
            random_ph(rng, pick(rng))};
}

// ---------------------------------------------------------------------------
// the worked three-server example built into --selftest

TandemInputs worked_example() {
    PhRepresentation s1(Matrix{{0.5, 0.3}},
                        Matrix{{-1.0330, 0.3099}, {0.3984, -1.3281}},
                        DistClass::ph);
    // Middle server: row 3 sums to +0.4897, which fails the phase-type sign
    // rules, so the block is declared matrix-exponential instead.
    PhRepresentation s2(Matrix{{0.5, 0.3, 0.2}},
                        Matrix{{-1.6321, 0.8161, 0.8161},
                               {0.0, -3.2643, 0.0},
                               {2.9379, 2.4482, -4.8964}},
                        DistClass::me);
    PhRepresentation s3(Matrix{{1.0, 0.0, 0.0, 0.0}},
                        Matrix{{-4.0, 4.0, 0.0, 0.0},
                               {0.0, -4.0, 4.0, 0.0},
                               {0.0, 0.0, -4.0, 4.0},
                               {0.0, 0.0, 0.0, -4.0}},
                        DistClass::ph);
    return {std::move(s1), std::move(s2), std::move(s3)};
}

// Published 4-decimal values the worked example must reproduce.
const Matrix kGoldenB{{0.8449, -0.1325, -0.1127, -0.0956},
                      {0.8139, -0.1496, -0.1207, -0.0978}};
const Matrix kGoldenC{{-0.0853, -0.0514},
                      {-0.0598, -0.0361},
                      {-0.0351, -0.0212},
                      {-0.0137, -0.0083}};
const Matrix kGoldenGRow1{{0.8862, 0.0190, 0.0158, 0.0132}};
const Matrix kGoldenG_vec{{0.6315, 0.0614, 0.0512, 0.0426}};
const Matrix kGoldenR3{{0.7196, 0.0467, 0.0389, 0.0324}};
const Matrix kGoldenD2{{0.2111, 0.1253}};

// ---------------------------------------------------------------------------
// selftest

class CheckTable {
  public:
    explicit CheckTable(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& label, const std::string& detail) {
        out_ << (ok ? "[PASS] " : "[FAIL] ") << label;
        if (!detail.empty()) out_ << " (" << detail << ")";
        out_ << "\n";
        ++total_;
        if (ok) ++passed_;
    }

    void check_le(double value, double bound, const std::string& label) {
        check(value <= bound, label, "worst " + fmt("%.3e", value) +
                                         ", bound " + fmt("%.3e", bound));
    }

    int passed() const { return passed_; }
    int total() const { return total_; }
    bool all_passed() const { return passed_ == total_; }

  private:
    std::ostream& out_;
    int passed_ = 0;
    int total_ = 0;
};

int run_selftest(std::uint64_t seed, bool quick, std::ostream& out) {
    CheckTable table(out);
    const std::size_t triples = quick ? 4 : 20;
    out << "selftest: seed=" << seed << " triples=" << triples << "\n";

    // Worked example, both solve paths.
    {
        const TandemInputs inputs = worked_example();
        const TandemSolution closed = solve_closed_form(inputs);
        const TandemSolution combined = solve_combined(inputs);

        table.check_le(max_abs_diff(closed.r3, kGoldenR3), 5e-3,
                       "worked example: blocking weights match printed values");
        table.check_le(max_abs_diff(closed.d2, kGoldenD2), 5e-3,
                       "worked example: idle weights match printed values");
        table.check_le(max_abs_diff(closed.workspace.b, kGoldenB), 5e-3,
                       "worked example: coupling matrix B matches");
        table.check_le(max_abs_diff(closed.workspace.c, kGoldenC), 5e-3,
                       "worked example: coupling matrix C matches");
        Matrix g_row1(1, 4);
        for (std::size_t j = 0; j < 4; ++j) g_row1(0, j) = closed.workspace.g_matrix(0, j);
        table.check_le(max_abs_diff(g_row1, kGoldenGRow1), 5e-3,
                       "worked example: eliminated-system row matches");
        table.check_le(max_abs_diff(closed.workspace.g_vector, kGoldenG_vec), 5e-3,
                       "worked example: eliminated right-hand side matches");
        table.check_le(std::max(closed.residual_r3_equation, closed.residual_d2_equation),
                       1e-9, "worked example: equation residuals");
        table.check_le(std::max(max_abs_diff(closed.r3, combined.r3),
                                max_abs_diff(closed.d2, combined.d2)),
                       1e-9, "worked example: elimination and block paths agree");
    }

    // Scalar sanity: three exponential servers of rate 1 have a closed
    // solution r3 = 9/11, d2 = 4/11 by hand algebra.
    {
        PhRepresentation expo(Matrix{{1.0}}, Matrix{{-1.0}}, DistClass::ph);
        const TandemInputs inputs{expo, expo, expo};
        const TandemSolution sol = solve_closed_form(inputs);
        const double err = std::max(std::abs(sol.r3(0, 0) - 9.0 / 11.0),
                                    std::abs(sol.d2(0, 0) - 4.0 / 11.0));
        table.check_le(err, 1e-12, "scalar case: hand-computed weights");

        const FixedPointResult fp = fixed_point_solve(inputs, QuadratureConfig{});
        const double fp_err = std::max(max_abs_diff(fp.r3, sol.r3),
                                       max_abs_diff(fp.d2, sol.d2));
        table.check_le(fp_err, 1e-6, "scalar case: integral-equation iteration agrees");
    }

    // Random triples: residuals, path agreement, closure, oracle deltas.
    {
        std::mt19937_64 rng(seed);
        double worst_residual = 0.0;
        double worst_agreement = 0.0;
        double worst_closure = 0.0;
        double worst_oracle = 0.0;
        double worst_fp = 0.0;
        const QuadratureConfig cfg;
        for (std::size_t i = 0; i < triples; ++i) {
            const TandemInputs inputs = random_triple(rng, 3);
            const TandemSolution closed = solve_closed_form(inputs);
            const TandemSolution combined = solve_combined(inputs);
            worst_residual = std::max({worst_residual, closed.residual_r3_equation,
                                       closed.residual_d2_equation});
            worst_agreement = std::max({worst_agreement,
                                        max_abs_diff(closed.r3, combined.r3),
                                        max_abs_diff(closed.d2, combined.d2)});
            worst_closure = std::max(worst_closure, closed.closure_violation);

            auto f_i2 = [&](double t) { return cdf(closed.rep_i2, t); };
            auto f_r3 = [&](double t) { return cdf(closed.rep_r3, t); };
            auto f_s2 = [&](double t) { return cdf(inputs.s2, t); };
            worst_oracle = std::max({worst_oracle,
                                     max_abs_diff(oracle_r3(f_i2, inputs.s3, cfg), closed.r3),
                                     max_abs_diff(oracle_d2(f_s2, f_r3, inputs.s1, cfg), closed.d2)});

            const FixedPointResult fp = fixed_point_solve(inputs, cfg);
            worst_fp = std::max({worst_fp, max_abs_diff(fp.r3, closed.r3),
                                 max_abs_diff(fp.d2, closed.d2)});
        }
        table.check_le(worst_residual, 1e-9, "random triples: equation residuals");
        table.check_le(worst_agreement, 1e-9, "random triples: two paths agree");
        table.check_le(worst_closure, 1e-9, "random triples: weights are probabilities");
        table.check_le(worst_oracle, 1e-6, "random triples: quadrature oracle agrees");
        table.check_le(worst_fp, 1e-6, "random triples: fixed-point solve agrees");
    }

    out << "selftest: " << table.passed() << "/" << table.total() << " passed\n";
    return table.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// solve + report

struct SolveOptions {
    std::string problem_path;
    std::string path_override;  // "", "closed", "closed_form", "combined"
    std::string class_override; // "", "me"
    std::string output_dir;
    bool cdf_grid = false;
    bool oracle = false;
};

std::string make_report(const ProblemFile& problem, const TandemInputs& inputs,
                        const TandemSolution& sol, SolvePath path,
                        const SolveOptions& opt) {
    std::ostringstream out;
    out << "problem: " << opt.problem_path << "\n";
    if (!problem.comment.empty()) out << "comment: " << problem.comment << "\n";
    out << "orders: n1=" << inputs.s1.order() << " n2=" << inputs.s2.order()
        << " n3=" << inputs.s3.order() << "\n";
    out << "eliminated-system order: " << complexity_report(inputs) << "\n";
    out << "path: " << (path == SolvePath::closed_form ? "closed_form" : "combined")
        << "\n\n";

    print_vector(out, "r3 (blocking-time weights)", sol.r3);
    print_vector(out, "d2 (idle-time weights)", sol.d2);
    out << "\n";
    print_matrix(out, "B", sol.workspace.b);
    print_matrix(out, "C", sol.workspace.c);
    print_matrix(out, "G = I + C*B", sol.workspace.g_matrix);
    print_vector(out, "g", sol.workspace.g_vector);
    out << "\n";
    out << "residual of blocking-weight equation: "
        << fmt("%.3e", sol.residual_r3_equation) << "\n";
    out << "residual of idle-weight equation:     "
        << fmt("%.3e", sol.residual_d2_equation) << "\n";
    out << "condition estimate of solved system:  "
        << fmt("%.3e", sol.condition_estimate) << "\n";
    if (sol.condition_estimate > 1e8)
        out << "warning: solved system is ill-conditioned\n";
    out << "closure: " << (sol.closure_ok ? "ok" : "violated")
        << " (max excursion outside [0,1]: " << fmt("%.3e", sol.closure_violation)
        << ")\n";
    return out.str();
}

std::string oracle_report(const TandemInputs& inputs, const TandemSolution& sol,
                          const QuadratureConfig& cfg) {
    auto f_i2 = [&](double t) { return cdf(sol.rep_i2, t); };
    auto f_r3 = [&](double t) { return cdf(sol.rep_r3, t); };
    auto f_s2 = [&](double t) { return cdf(inputs.s2, t); };
    const double delta_r3 = max_abs_diff(oracle_r3(f_i2, inputs.s3, cfg), sol.r3);
    const double delta_d2 =
        max_abs_diff(oracle_d2(f_s2, f_r3, inputs.s1, cfg), sol.d2);
    const FixedPointResult fp = fixed_point_solve(inputs, cfg);

    std::ostringstream out;
    out << "\noracle (independent quadrature):\n";
    out << "  |r3 - oracle_r3|: " << fmt("%.3e", delta_r3) << "\n";
    out << "  |d2 - oracle_d2|: " << fmt("%.3e", delta_d2) << "\n";
    out << "  fixed point: converged in " << fp.iterations
        << " iterations, last delta " << fmt("%.3e", fp.last_delta) << "\n";
    out << "  |r3 - fixed point|: " << fmt("%.3e", max_abs_diff(fp.r3, sol.r3))
        << "\n";
    out << "  |d2 - fixed point|: " << fmt("%.3e", max_abs_diff(fp.d2, sol.d2))
        << "\n";
    return out.str();
}

std::string make_cdf_csv(const TandemInputs& inputs, const TandemSolution& sol,
                         const GridSpec& grid) {
    std::string csv = "t,F_S1,F_S2,F_S3,F_R3,F_I2\n";
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double t = grid.t_max * static_cast<double>(i) /
                         static_cast<double>(grid.points - 1);
        char line[256];
        std::snprintf(line, sizeof line, "%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", t,
                      cdf(inputs.s1, t), cdf(inputs.s2, t), cdf(inputs.s3, t),
                      cdf(sol.rep_r3, t), cdf(sol.rep_i2, t));
        csv += line;
    }
    return csv;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + path.string());
    out << content;
    if (!out) throw ParseError("cannot write output file: " + path.string());
}

int run_solve(const SolveOptions& opt) {
    ProblemFile problem = load_problem(opt.problem_path);

    if (opt.class_override == "me") {
        auto relax = [](const PhRepresentation& rep) {
            return PhRepresentation(rep.init(), rep.generator(), DistClass::me);
        };
        problem.s1 = relax(problem.s1);
        problem.s2 = relax(problem.s2);
        problem.s3 = relax(problem.s3);
    }

    const char* names[] = {"s1", "s2", "s3"};
    const PhRepresentation* reps[] = {&problem.s1, &problem.s2, &problem.s3};
    for (int i = 0; i < 3; ++i) {
        const ValidationReport report = validate(*reps[i]);
        if (!report.ok) {
            std::cerr << "validation failed: block '" << names[i]
                      << "': " << report.violation << "\n";
            return 2;
        }
    }

    SolvePath path = problem.solver.path;
    if (opt.path_override == "closed" || opt.path_override == "closed_form")
        path = SolvePath::closed_form;
    else if (opt.path_override == "combined")
        path = SolvePath::combined;

    const TandemInputs inputs{problem.s1, problem.s2, problem.s3};
    const TandemSolution sol = path == SolvePath::closed_form
                                   ? solve_closed_form(inputs)
                                   : solve_combined(inputs);

    std::string report = make_report(problem, inputs, sol, path, opt);
    if (opt.oracle || problem.solver.oracle.enabled)
        report += oracle_report(inputs, sol, problem.solver.oracle.config);

    const bool to_dir = !opt.output_dir.empty();
    std::filesystem::path dir(to_dir ? opt.output_dir : ".");
    if (to_dir) std::filesystem::create_directories(dir);

    if (to_dir)
        write_file(dir / "report.txt", report);
    else
        std::cout << report;

    if (opt.cdf_grid)
        write_file(dir / "cdf.csv", make_cdf_csv(inputs, sol, problem.solver.grid));

    if (sol.condition_estimate > 1e8)
        std::cerr << "warning: solved system condition estimate "
                  << fmt("%.3e", sol.condition_estimate) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-server tandem line: blocking-time and idle-time solver"};

    SolveOptions opt;
    bool selftest = false;
    bool quick = false;
    std::uint64_t seed = 12345;

    app.add_option("--solve", opt.problem_path, "JSON problem file to solve");
    app.add_option("--path", opt.path_override,
                   "solve path: closed|combined (overrides the problem file)")
        ->check(CLI::IsMember({"closed", "closed_form", "combined"}));
    app.add_flag("--cdf-grid", opt.cdf_grid, "write the cdf grid CSV (cdf.csv)");
    app.add_flag("--oracle", opt.oracle,
                 "append independent quadrature cross-checks to the report");
    app.add_option("--output", opt.output_dir,
                   "directory for report.txt and cdf.csv (default: report to "
                   "stdout, cdf.csv to the working directory)");
    app.add_option("--class-override", opt.class_override,
                   "force a distribution class on every block (only: me)")
        ->check(CLI::IsMember({"me"}));
    app.add_flag("--selftest", selftest,
                 "run the built-in worked example and randomized cross-checks");
    app.add_option("--seed", seed, "random seed for --selftest");
    app.add_flag("--quick", quick, "shrink the --selftest random suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (selftest) return run_selftest(seed, quick, std::cout);
        if (opt.problem_path.empty()) {
            std::cerr << "nothing to do: pass --solve <file> or --selftest "
                         "(--help for usage)\n";
            return 4;
        }
        return run_solve(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return 3;
    }
}
