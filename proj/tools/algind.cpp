#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "algind/casebook.hpp"
#include "algind/criterion.hpp"
#include "algind/jacobian.hpp"
#include "algind/job.hpp"
#include "algind/parser.hpp"
#include "algind/report.hpp"
#include "algind/series.hpp"

namespace {

using namespace algind;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t budget = 64;
    long prec = 128;
};

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto d = std::chrono::steady_clock::now() - start;
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
}

CheckOptions check_options(const Options& o) {
    CheckOptions co;
    if (o.seed_set) co.seed = o.seed;
    co.budget = o.budget;
    return co;
}

std::uint64_t effective_seed(const JobSpec& job, const Options& o) {
    if (o.seed_set) return o.seed;
    return job.seed.value_or(0);
}

int cmd_check(const std::string& path, const Options& o) {
    auto start = std::chrono::steady_clock::now();
    JobSpec job = parse_job(read_file(path));
    Certificate cert = run_check(job, check_options(o));
    ReportMeta meta{job_digest(job), effective_seed(job, o), o.budget, job.precision_bits, elapsed_ms(start)};
    if (o.json)
        std::cout << check_report_json(cert, meta).dump(2) << "\n";
    else
        std::cout << check_report_text(cert, meta);
    return 0;
}

int cmd_jacobian(const std::string& path, const Options& o) {
    auto start = std::chrono::steady_clock::now();
    JobSpec job = parse_job(read_file(path));

    SymbolicMatrix mat;
    switch (job.mode) {
        case JobMode::PolynomialMap:
        case JobMode::RationalMap: mat = jacobian_of_map(job.equations, job.x_vars); break;
        case JobMode::Implicit:
        case JobMode::Partial: {
            std::vector<Polynomial> eqs;
            for (const auto& e : job.equations) eqs.push_back(e.num());
            std::vector<std::string> diff_vars = job.x_vars;
            if (job.mode == JobMode::Partial)
                diff_vars.assign(job.x_vars.begin(), job.x_vars.begin() + static_cast<long>(job.m));
            mat = jacobian_implicit(eqs, diff_vars);
            break;
        }
    }
    RationalFunction det = determinant(mat, DetMethod::Auto);

    if (o.json) {
        ordered_json j;
        j["version"] = kToolVersion;
        j["job_digest"] = job_digest(job);
        j["rows"] = mat.rows;
        j["cols"] = mat.cols;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < mat.rows; ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < mat.cols; ++c) row.push_back(format_canonical(mat.at(r, c)));
            rows.push_back(row);
        }
        j["entries"] = rows;
        j["determinant"] = format_canonical(det);
        j["timing_ms"] = elapsed_ms(start);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "jacobian (" << mat.rows << "x" << mat.cols << "), rows are equations:\n";
        for (std::size_t r = 0; r < mat.rows; ++r) {
            std::cout << "  [ ";
            for (std::size_t c = 0; c < mat.cols; ++c) {
                if (c) std::cout << " | ";
                std::cout << format_canonical(mat.at(r, c));
            }
            std::cout << " ]\n";
        }
        std::cout << "determinant: " << format_canonical(det) << "\n";
    }
    return 0;
}

void print_enclosure_result(const std::string& name, const Enclosure& e, const Options& o, long ms) {
    if (o.json) {
        ordered_json j;
        j["version"] = kToolVersion;
        j["series"] = name;
        j["enclosure"] = enclosure_json(e);
        j["timing_ms"] = ms;
        j["seed"] = o.seed;
        j["precision_bits"] = o.prec;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << name << " = ";
    if (auto dec = e.decimal_string(36))
        std::cout << *dec << "...";
    else
        std::cout << e.to_string();
    std::cout << "\n  mid = " << e.mid().to_string() << "\n  rad = " << e.rad().to_string() << "\n";
}

unsigned long parse_unsigned(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(what + " must be a non-negative integer, got '" + s + "'");
    }
}

int cmd_eval(const std::string& series, const std::vector<std::string>& params, const Options& o) {
    auto start = std::chrono::steady_clock::now();
    Precision prec(o.prec);
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ValidationError("series '" + series + "' takes " + std::to_string(count) + " parameter(s)");
    };
    auto rat = [&](std::size_t i) { return Rational::from_string(params[i]); };

    Enclosure result;
    if (series == "zeta-fib") {
        need(1);
        result = zeta_fib(static_cast<unsigned>(parse_unsigned(params[0], "2s")), prec);
    } else if (series == "q-series") {
        need(3);
        QSeriesFamily fam;
        if (params[0] == "A") fam = QSeriesFamily::A;
        else if (params[0] == "B") fam = QSeriesFamily::B;
        else if (params[0] == "C") fam = QSeriesFamily::C;
        else throw ValidationError("family must be A, B or C");
        result = q_series(fam, static_cast<unsigned>(parse_unsigned(params[1], "order")), rat(2), prec);
    } else if (series == "ramanujan") {
        need(2);
        RamanujanFn fn;
        if (params[0] == "P") fn = RamanujanFn::P;
        else if (params[0] == "Q") fn = RamanujanFn::Q;
        else if (params[0] == "R") fn = RamanujanFn::R;
        else throw ValidationError("function must be P, Q or R");
        result = ramanujan(fn, rat(1), prec);
    } else if (series == "theta") {
        need(1);
        result = theta(rat(0), prec);
    } else if (series == "exp-residue") {
        need(3);
        result = exp_residue(static_cast<unsigned>(parse_unsigned(params[0], "modulus")),
                             static_cast<unsigned>(parse_unsigned(params[1], "residue")), rat(2), prec);
    } else if (series == "exp-fib") {
        if (params.empty()) throw ValidationError("exp-fib takes a kind fs|gs|fab|gab and parameters");
        ExpFibParams p;
        ExpFibKind kind;
        if (params[0] == "fs" || params[0] == "gs") {
            need(3);
            kind = params[0] == "fs" ? ExpFibKind::FibPower : ExpFibKind::LucasPower;
            p.s = static_cast<unsigned>(parse_unsigned(params[1], "s"));
            result = exp_fib_series(kind, p, rat(2), prec);
        } else if (params[0] == "fab" || params[0] == "gab") {
            need(4);
            kind = params[0] == "fab" ? ExpFibKind::FibArith : ExpFibKind::LucasArith;
            p.a = static_cast<unsigned>(parse_unsigned(params[1], "a"));
            p.b = static_cast<unsigned>(parse_unsigned(params[2], "b"));
            result = exp_fib_series(kind, p, rat(3), prec);
        } else {
            throw ValidationError("exp-fib kind must be fs, gs, fab or gab");
        }
    } else if (series == "elliptic-K") {
        need(1);
        result = elliptic_K(rat(0), prec);
    } else if (series == "elliptic-E") {
        need(1);
        result = elliptic_E(rat(0), prec);
    } else if (series == "modulus") {
        need(0);
        result = solve_modulus(prec);
    } else if (series == "pi") {
        need(0);
        result = pi_enclosure(prec);
    } else if (series == "ln") {
        need(1);
        result = ln_enclosure(rat(0), prec);
    } else if (series == "sqrt") {
        need(1);
        result = sqrt_enclosure(rat(0), prec);
    } else if (series == "exp") {
        need(1);
        result = exp_enclosure(rat(0), prec);
    } else if (series == "fib") {
        need(1);
        auto [f, l] = fib_lucas(parse_unsigned(params[0], "n"));
        if (o.json) {
            ordered_json j;
            j["version"] = kToolVersion;
            j["series"] = "fib";
            j["F"] = f.to_string();
            j["L"] = l.to_string();
            j["timing_ms"] = elapsed_ms(start);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "F = " << f.to_string() << "\nL = " << l.to_string() << "\n";
        }
        return 0;
    } else {
        throw ValidationError("unknown series '" + series + "'");
    }

    print_enclosure_result(series, result, o, elapsed_ms(start));
    return 0;
}

int cmd_case_list(const Options& o) {
    auto cases = list_cases();
    if (o.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : cases)
            arr.push_back({{"id", c.id},
                           {"title", c.title},
                           {"citation", c.citation},
                           {"needs_user_polynomials", c.needs_user_polynomials}});
        ordered_json j;
        j["version"] = kToolVersion;
        j["cases"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : cases) {
            std::cout << c.id << (c.needs_user_polynomials ? "  [accepts --poly input]" : "") << "\n    " << c.title
                      << " (" << c.citation << ")\n";
        }
    }
    return 0;
}

int cmd_case_run(const std::string& id, const std::vector<std::string>& poly_files, const Options& o) {
    auto start = std::chrono::steady_clock::now();
    CaseInputs inputs;
    inputs.seed = o.seed;
    inputs.budget = o.budget;
    for (const auto& f : poly_files) inputs.polynomials.push_back(read_file(f));
    CaseReport report = run_case(id, Precision(o.prec), inputs);
    ReportMeta meta{"", o.seed, o.budget, o.prec, elapsed_ms(start)};
    if (o.json)
        std::cout << case_report_json(report, meta).dump(2) << "\n";
    else
        std::cout << case_report_text(report, meta);
    return 0;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const PrecisionError*>(&e) || dynamic_cast<const BudgetError*>(&e)) return 3;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
        dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ArithmeticError*>(&e) ||
        dynamic_cast<const StructuralError*>(&e))
        return 2;
    return 4;
}

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const ValidationError*>(&e)) return "validation";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const ArithmeticError*>(&e)) return "arithmetic";
    if (dynamic_cast<const StructuralError*>(&e)) return "structural";
    if (dynamic_cast<const PrecisionError*>(&e)) return "precision";
    if (dynamic_cast<const BudgetError*>(&e)) return "budget";
    return "internal";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian-determinant criterion for transferring algebraic independence"};
    app.require_subcommand(1);

    Options opts;
    app.add_flag("--json", opts.json, "emit machine-readable JSON");
    auto* seed_opt = app.add_option("--seed", opts.seed, "seed for randomized zero testing");
    app.add_option("--budget", opts.budget, "sample budget for randomized zero testing");

    std::string job_path;
    auto* check = app.add_subcommand("check", "run the independence criterion on a job file");
    check->add_option("jobfile", job_path, "job file (JSON)")->required();

    std::string jac_path;
    auto* jac = app.add_subcommand("jacobian", "print the symbolic Jacobian and determinant of a job");
    jac->add_option("jobfile", jac_path, "job file (JSON)")->required();

    std::string series_name;
    std::vector<std::string> series_params;
    auto* eval = app.add_subcommand("eval", "evaluate a built-in series to a certified enclosure");
    eval->add_option("series", series_name,
                     "zeta-fib | q-series | ramanujan | theta | exp-residue | exp-fib | "
                     "elliptic-K | elliptic-E | modulus | pi | ln | sqrt | exp | fib")
        ->required();
    eval->add_option("params", series_params, "series parameters");
    eval->add_option("--prec", opts.prec, "target precision in bits");

    auto* case_cmd = app.add_subcommand("case", "built-in case studies");
    case_cmd->require_subcommand(1);
    auto* case_list = case_cmd->add_subcommand("list", "list available cases");
    std::string case_id;
    std::vector<std::string> poly_files;
    auto* case_run = case_cmd->add_subcommand("run", "run one case");
    case_run->add_option("id", case_id, "case id")->required();
    case_run->add_option("--prec", opts.prec, "target precision in bits");
    case_run->add_option("--poly", poly_files, "user polynomial file (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    opts.seed_set = seed_opt->count() > 0;

    try {
        if (*check) return cmd_check(job_path, opts);
        if (*jac) return cmd_jacobian(jac_path, opts);
        if (*eval) return cmd_eval(series_name, series_params, opts);
        if (*case_list) return cmd_case_list(opts);
        if (*case_run) return cmd_case_run(case_id, poly_files, opts);
        return 4;
    } catch (const std::exception& e) {
        int code = exit_code_for(e);
        if (opts.json)
            std::cout << error_json(error_type(e), e.what(), code).dump(2) << "\n";
        else
            std::cerr << "error (" << error_type(e) << "): " << e.what() << "\n";
        return code;
    }
}
