#include "algind/criterion.hpp"

#include "algind/parser.hpp"

namespace algind {

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Independent: return "Independent";
        case Conclusion::Dependent: return "Dependent";
        case Conclusion::Inconclusive: return "Inconclusive";
    }
    throw InternalError("unhandled conclusion");
}

std::string to_string(TheoremTag t) {
    switch (t) {
        case TheoremTag::T1: return "T1";
        case TheoremTag::T2: return "T2";
        case TheoremTag::T3: return "T3";
        case TheoremTag::T4: return "T4";
    }
    throw InternalError("unhandled theorem tag");
}

namespace {

constexpr std::size_t kDetPrintLimit = 240;

std::string truncated_print(const RationalFunction& det) {
    std::string s = format_canonical(det);
    if (s.size() > kDetPrintLimit) {
        s.resize(kDetPrintLimit);
        s += "...";
    }
    return s;
}

std::vector<AssumptionRecord> gather_assumptions(const JobSpec& job) {
    std::vector<AssumptionRecord> out;
    std::string names;
    for (std::size_t i = 0; i < job.x_vars.size(); ++i) {
        if (i) names += ", ";
        names += job.x_vars[i];
    }
    out.push_back({names + " are algebraically independent over Q", "hypothesis (unverified)"});
    for (const auto& a : job.assumptions) out.push_back({a, "job-file"});
    return out;
}

std::uint64_t effective_seed(const JobSpec& job, const CheckOptions& opts) {
    if (opts.seed) return *opts.seed;
    return job.seed.value_or(0);
}

std::vector<Polynomial> polynomial_equations(const JobSpec& job) {
    std::vector<Polynomial> eqs;
    eqs.reserve(job.equations.size());
    for (const auto& e : job.equations) {
        if (!e.is_polynomial()) throw InternalError("equation is not polynomial in a polynomial-mode job");
        eqs.push_back(e.num());
    }
    return eqs;
}

void require_mode(const JobSpec& job, JobMode mode) {
    if (job.mode != mode)
        throw ValidationError("job mode is '" + to_string(job.mode) + "', expected '" + to_string(mode) + "'");
}

// Enclosures must contain 0 at every equation, otherwise the instance is
// inconsistent with its own point.
void check_residuals(const std::vector<Polynomial>& eqs, const PointAssignment& point, long prec) {
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        Enclosure residual = poly_eval(eqs[j], point, prec);
        if (residual.excludes_zero())
            throw ValidationError("equations not satisfied at point: residual of equation " +
                                  std::to_string(j + 1) + " excludes 0");
    }
}

Enclosure jacobian_enclosure_det(const SymbolicMatrix& mat, const PointAssignment& point, long prec) {
    bool exact = true;
    for (const auto& v : mat.vars) exact = exact && point.at(v).is_exact();
    if (exact) {
        std::vector<Rational> pt;
        pt.reserve(mat.vars.size());
        for (const auto& v : mat.vars) pt.push_back(point.at(v).mid());
        std::vector<Rational> vals;
        vals.reserve(mat.entries.size());
        for (const auto& e : mat.entries) vals.push_back(e.num().eval_exact(pt));
        return Enclosure(rational_determinant(std::move(vals), mat.rows));
    }
    std::vector<Enclosure> vals;
    vals.reserve(mat.entries.size());
    for (const auto& e : mat.entries) vals.push_back(poly_eval(e.num(), point, prec));
    return enclosure_determinant(vals, mat.rows, prec);
}

Certificate from_zero_test(const JobSpec& job, const SymbolicMatrix& mat, const ZeroTestResult& zt,
                           TheoremTag tag, Conclusion when_zero, const std::string& field) {
    Certificate cert;
    cert.verdict.theorem_used = tag;
    cert.verdict.over_field = field;
    cert.assumptions = gather_assumptions(job);
    cert.inputs_digest = job_digest(job);
    cert.evidence.det_print = truncated_print(determinant(mat, DetMethod::Auto));
    if (zt.status == ZeroTestResult::Status::NonzeroWitness) {
        cert.verdict.conclusion = Conclusion::Independent;
        cert.evidence.kind = Evidence::Kind::Witness;
        cert.evidence.witness = *zt.witness;
        cert.evidence.witness_value = zt.witness_value;
    } else {
        cert.verdict.conclusion = when_zero;
        cert.evidence.kind = Evidence::Kind::ZeroExpansion;
    }
    return cert;
}

} // namespace

Certificate check_polynomial_map(const JobSpec& job, const CheckOptions& opts) {
    require_mode(job, JobMode::PolynomialMap);
    SymbolicMatrix mat = jacobian_of_map(job.equations, job.x_vars);
    ZeroTestResult zt = det_zero_status(mat, effective_seed(job, opts), opts.budget);
    return from_zero_test(job, mat, zt, TheoremTag::T2, Conclusion::Dependent, "Q");
}

Certificate check_rational_map(const JobSpec& job, const CheckOptions& opts) {
    require_mode(job, JobMode::RationalMap);
    for (const auto& e : job.equations)
        if (e.den().is_zero()) throw ValidationError("denominator is identically zero");
    ClearedJacobian cj = cleared_jacobian(job.equations, job.x_vars);
    SymbolicMatrix mat = cleared_matrix(cj, job.x_vars);
    ZeroTestResult zt = det_zero_status(mat, effective_seed(job, opts), opts.budget);
    return from_zero_test(job, mat, zt, TheoremTag::T3, Conclusion::Inconclusive, "Q");
}

namespace {

Certificate interval_check(const JobSpec& job, TheoremTag tag, const std::vector<std::string>& diff_vars,
                           const std::string& field, bool allow_retry) {
    std::vector<Polynomial> eqs = polynomial_equations(job);
    const PointAssignment& point = *job.point;
    long prec = job.precision_bits;
    check_residuals(eqs, point, prec);

    SymbolicMatrix mat = jacobian_implicit(eqs, diff_vars);
    Certificate cert;
    cert.verdict.theorem_used = tag;
    cert.verdict.over_field = field;
    cert.assumptions = gather_assumptions(job);
    cert.inputs_digest = job_digest(job);
    cert.evidence.kind = Evidence::Kind::Interval;

    Enclosure det = jacobian_enclosure_det(mat, point, prec);
    cert.evidence.interval_widths.push_back(det.width());
    cert.evidence.eval_precision_bits = prec;

    // A narrow interval around zero may just need more working precision;
    // a wide one is dominated by the input radii and will not improve.
    if (det.contains_zero() && allow_retry && det.width() < Rational::pow2(-16)) {
        prec *= 2;
        det = jacobian_enclosure_det(mat, point, prec);
        cert.evidence.interval_widths.push_back(det.width());
        cert.evidence.eval_precision_bits = prec;
    }

    cert.evidence.det_interval = det;
    cert.verdict.conclusion = det.excludes_zero() ? Conclusion::Independent : Conclusion::Inconclusive;
    return cert;
}

} // namespace

Certificate check_implicit(const JobSpec& job, const CheckOptions&) {
    require_mode(job, JobMode::Implicit);
    return interval_check(job, TheoremTag::T1, job.x_vars, "Q", true);
}

Certificate check_partial(const JobSpec& job, const CheckOptions&) {
    require_mode(job, JobMode::Partial);
    if (job.m < 1 || job.m >= job.n()) throw ValidationError("'m' must satisfy 1 <= m < n");
    std::vector<std::string> head(job.x_vars.begin(), job.x_vars.begin() + static_cast<long>(job.m));
    std::string field = "Q(";
    for (std::size_t i = job.m; i < job.n(); ++i) {
        if (i > job.m) field += ",";
        field += job.x_vars[i];
    }
    field += ")";
    return interval_check(job, TheoremTag::T4, head, field, false);
}

Certificate run_check(const JobSpec& job, const CheckOptions& opts) {
    switch (job.mode) {
        case JobMode::Implicit: return check_implicit(job, opts);
        case JobMode::PolynomialMap: return check_polynomial_map(job, opts);
        case JobMode::RationalMap: return check_rational_map(job, opts);
        case JobMode::Partial: return check_partial(job, opts);
    }
    throw InternalError("unhandled mode");
}

bool recheck_certificate(const JobSpec& job, const Certificate& cert) {
    SymbolicMatrix mat;
    switch (cert.verdict.theorem_used) {
        case TheoremTag::T2: mat = jacobian_of_map(job.equations, job.x_vars); break;
        case TheoremTag::T3: mat = cleared_matrix(cleared_jacobian(job.equations, job.x_vars), job.x_vars); break;
        case TheoremTag::T1: mat = jacobian_implicit(polynomial_equations(job), job.x_vars); break;
        case TheoremTag::T4: {
            std::vector<std::string> head(job.x_vars.begin(), job.x_vars.begin() + static_cast<long>(job.m));
            mat = jacobian_implicit(polynomial_equations(job), head);
            break;
        }
    }

    switch (cert.evidence.kind) {
        case Evidence::Kind::Witness: {
            if (!cert.evidence.witness_value) return false;
            std::vector<Rational> pt;
            pt.reserve(mat.vars.size());
            for (const auto& v : mat.vars) {
                auto it = cert.evidence.witness.find(v);
                if (it == cert.evidence.witness.end()) return false;
                pt.push_back(it->second);
            }
            std::vector<Rational> vals;
            vals.reserve(mat.entries.size());
            for (const auto& e : mat.entries) {
                Rational d = e.den().eval_exact(pt);
                if (d.is_zero()) return false;
                vals.push_back(e.num().eval_exact(pt) / d);
            }
            Rational det = rational_determinant(std::move(vals), mat.rows);
            return !det.is_zero() && det == *cert.evidence.witness_value;
        }
        case Evidence::Kind::Interval: {
            if (!job.point || !cert.evidence.det_interval) return false;
            Enclosure det = jacobian_enclosure_det(mat, *job.point, cert.evidence.eval_precision_bits);
            bool independent = cert.verdict.conclusion == Conclusion::Independent;
            return det.excludes_zero() == independent;
        }
        case Evidence::Kind::ZeroExpansion: return poly_is_zero(determinant(mat, DetMethod::Auto).num());
    }
    return false;
}

} // namespace algind
