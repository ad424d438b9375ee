#ifndef PHTANDEM_PROBLEM_IO_HPP
#define PHTANDEM_PROBLEM_IO_HPP

#include <cstddef>
#include <string>

#include "phtandem/quadrature.hpp"
#include "phtandem/tandem.hpp"

namespace phtandem {

/// Evaluation grid for cdf output.
struct GridSpec {
    double t_max = 5.0;
    std::size_t points = 201;
};

struct OracleSpec {
    bool enabled = false;
    QuadratureConfig config;
};

struct SolverSpec {
    SolvePath path = SolvePath::closed_form;
    GridSpec grid;
    OracleSpec oracle;
};

/// A parsed problem file: the three server distributions plus solver
/// options. Parsing checks shapes and option ranges only; the distribution
/// class rules are checked at solve time so that a structurally complete
/// file with an invalid generator is reported as a validation failure, not
/// a parse failure.
struct ProblemFile {
    PhRepresentation s1;
    PhRepresentation s2;
    PhRepresentation s3;
    SolverSpec solver;
    std::string comment;
};

/// Parses the JSON text of a problem file. The three distribution blocks
/// "s1"/"s2"/"s3" are required, each with fields `order`, `init`,
/// `generator` (array of row arrays) and optional `class` ("ph" | "me",
/// default "ph"). The optional "solver" block carries `path`
/// ("closed_form" | "combined"), `grid` {t_max, points} and `oracle`
/// {enabled, tolerances}. Any structural problem throws ParseError naming
/// the offending field.
ProblemFile parse_problem(const std::string& json_text);

/// Reads and parses a problem file; unreadable files throw ParseError.
ProblemFile load_problem(const std::string& path);

/// Serializes back to JSON (stable key order, round-trip exact values).
std::string serialize_problem(const ProblemFile& problem);

}  // namespace phtandem

#endif
