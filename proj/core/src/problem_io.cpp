#include "phtandem/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "phtandem/errors.hpp"

namespace phtandem {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& member(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) bad(where + ": missing field '" + key + "'");
    return *it;
}

double number_field(const json& obj, const char* key, const std::string& where) {
    const json& v = member(obj, key, where);
    if (!v.is_number()) bad(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

std::vector<double> number_array(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number()) bad(where + " must contain only numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

PhRepresentation parse_block(const json& root, const char* name) {
    const std::string where = std::string("block '") + name + "'";
    const json& block = member(root, name, "problem");
    if (!block.is_object()) bad(where + " must be an object");

    const json& order_v = member(block, "order", where);
    if (!order_v.is_number_unsigned() || order_v.get<std::size_t>() == 0)
        bad(where + ": 'order' must be a positive integer");
    const std::size_t n = order_v.get<std::size_t>();

    std::vector<double> init = number_array(member(block, "init", where), where + " 'init'");
    if (init.size() != n) bad(where + ": 'init' length does not match 'order'");

    const json& gen_v = member(block, "generator", where);
    if (!gen_v.is_array() || gen_v.size() != n)
        bad(where + ": 'generator' must have one row array per order");
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : gen_v) {
        std::vector<double> r = number_array(row, where + " 'generator' row");
        if (r.size() != n) bad(where + ": 'generator' rows must have 'order' entries");
        entries.insert(entries.end(), r.begin(), r.end());
    }

    DistClass cls = DistClass::ph;
    if (auto it = block.find("class"); it != block.end()) {
        if (!it->is_string()) bad(where + ": 'class' must be a string");
        const std::string s = it->get<std::string>();
        if (s == "ph")
            cls = DistClass::ph;
        else if (s == "me")
            cls = DistClass::me;
        else
            bad(where + ": 'class' must be \"ph\" or \"me\"");
    }

    try {
        return PhRepresentation(Matrix::row_vector(std::move(init)),
                                Matrix(n, n, std::move(entries)), cls);
    } catch (const Error& e) {
        bad(where + ": " + e.what());
    }
}

void parse_tolerances(const json& tol, QuadratureConfig& cfg) {
    if (!tol.is_object()) bad("solver 'oracle.tolerances' must be an object");
    for (const auto& [key, value] : tol.items()) {
        if (key == "abs_tol")
            cfg.abs_tol = value.get<double>();
        else if (key == "truncation_norm_tol")
            cfg.truncation_norm_tol = value.get<double>();
        else if (key == "fixed_point_tol")
            cfg.fixed_point_tol = value.get<double>();
        else if (key == "max_subdivisions")
            cfg.max_subdivisions = value.get<std::size_t>();
        else if (key == "fixed_point_max_iters")
            cfg.fixed_point_max_iters = value.get<std::size_t>();
        else
            bad("solver 'oracle.tolerances': unknown field '" + key + "'");
    }
    if (!(cfg.abs_tol > 0.0) || !(cfg.truncation_norm_tol > 0.0) ||
        !(cfg.fixed_point_tol > 0.0))
        bad("solver 'oracle.tolerances': tolerances must be positive");
    if (cfg.max_subdivisions == 0 || cfg.fixed_point_max_iters == 0)
        bad("solver 'oracle.tolerances': iteration budgets must be at least 1");
}

SolverSpec parse_solver(const json& root) {
    SolverSpec spec;
    auto it = root.find("solver");
    if (it == root.end()) return spec;
    const json& solver = *it;
    if (!solver.is_object()) bad("'solver' must be an object");

    if (auto p = solver.find("path"); p != solver.end()) {
        const std::string s = p->is_string() ? p->get<std::string>() : std::string();
        if (s == "closed_form")
            spec.path = SolvePath::closed_form;
        else if (s == "combined")
            spec.path = SolvePath::combined;
        else
            bad("solver 'path' must be \"closed_form\" or \"combined\"");
    }
    if (auto g = solver.find("grid"); g != solver.end()) {
        if (!g->is_object()) bad("solver 'grid' must be an object");
        if (g->contains("t_max")) spec.grid.t_max = number_field(*g, "t_max", "solver grid");
        if (g->contains("points")) {
            const json& pts = (*g)["points"];
            if (!pts.is_number_unsigned()) bad("solver grid 'points' must be a nonnegative integer");
            spec.grid.points = pts.get<std::size_t>();
        }
        if (!(spec.grid.t_max > 0.0)) bad("solver grid 't_max' must be positive");
        if (spec.grid.points < 2) bad("solver grid 'points' must be at least 2");
    }
    if (auto o = solver.find("oracle"); o != solver.end()) {
        if (!o->is_object()) bad("solver 'oracle' must be an object");
        if (o->contains("enabled")) {
            const json& en = (*o)["enabled"];
            if (!en.is_boolean()) bad("solver 'oracle.enabled' must be a boolean");
            spec.oracle.enabled = en.get<bool>();
        }
        if (o->contains("tolerances")) parse_tolerances((*o)["tolerances"], spec.oracle.config);
    }
    return spec;
}

json block_to_json(const PhRepresentation& rep) {
    json block;
    block["order"] = rep.order();
    json init = json::array();
    for (std::size_t j = 0; j < rep.order(); ++j) init.push_back(rep.init()(0, j));
    block["init"] = std::move(init);
    json gen = json::array();
    for (std::size_t i = 0; i < rep.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rep.order(); ++j) row.push_back(rep.generator()(i, j));
        gen.push_back(std::move(row));
    }
    block["generator"] = std::move(gen);
    block["class"] = rep.dist_class() == DistClass::ph ? "ph" : "me";
    return block;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        bad(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) bad("problem file must be a JSON object");

    try {
        ProblemFile problem{parse_block(root, "s1"), parse_block(root, "s2"),
                            parse_block(root, "s3"), parse_solver(root), {}};
        if (auto c = root.find("comment"); c != root.end()) {
            if (!c->is_string()) bad("'comment' must be a string");
            problem.comment = c->get<std::string>();
        }
        return problem;
    } catch (const json::exception& e) {
        bad(std::string("problem file field has the wrong type: ") + e.what());
    }
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) bad("cannot read problem file: " + path);
    return parse_problem(buffer.str());
}

std::string serialize_problem(const ProblemFile& problem) {
    json root;
    if (!problem.comment.empty()) root["comment"] = problem.comment;
    root["s1"] = block_to_json(problem.s1);
    root["s2"] = block_to_json(problem.s2);
    root["s3"] = block_to_json(problem.s3);
    json solver;
    solver["path"] =
        problem.solver.path == SolvePath::closed_form ? "closed_form" : "combined";
    solver["grid"] = {{"t_max", problem.solver.grid.t_max},
                      {"points", problem.solver.grid.points}};
    solver["oracle"] = {{"enabled", problem.solver.oracle.enabled}};
    root["solver"] = std::move(solver);
    return root.dump(2) + "\n";
}

}  // namespace phtandem
