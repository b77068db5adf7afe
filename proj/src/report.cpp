#include "algind/report.hpp"

#include <sstream>

namespace algind {

using nlohmann::ordered_json;

ordered_json enclosure_json(const Enclosure& e) {
    ordered_json j;
    j["mid"] = e.mid().to_string();
    j["rad"] = e.rad().to_string();
    if (auto dec = e.decimal_string(24)) j["decimal"] = *dec + "...";
    return j;
}

namespace {

ordered_json evidence_json(const Evidence& ev) {
    ordered_json j;
    switch (ev.kind) {
        case Evidence::Kind::Witness: {
            j["kind"] = "witness";
            j["det"] = ev.det_print;
            ordered_json w = ordered_json::object();
            for (const auto& [var, val] : ev.witness) w[var] = val.to_string();
            j["witness"] = w;
            j["witness_value"] = ev.witness_value ? ev.witness_value->to_string() : "";
            break;
        }
        case Evidence::Kind::Interval: {
            j["kind"] = "interval";
            if (ev.det_interval) j["det_interval"] = enclosure_json(*ev.det_interval);
            ordered_json widths = ordered_json::array();
            for (const auto& w : ev.interval_widths) widths.push_back(w.to_string());
            j["widths"] = widths;
            j["eval_precision_bits"] = ev.eval_precision_bits;
            break;
        }
        case Evidence::Kind::ZeroExpansion: {
            j["kind"] = "zero_expansion";
            j["det"] = ev.det_print;
            break;
        }
    }
    return j;
}

ordered_json assumptions_json(const std::vector<AssumptionRecord>& assumptions) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : assumptions) arr.push_back({{"text", a.text}, {"source", a.source}});
    return arr;
}

} // namespace

ordered_json certificate_json(const Certificate& cert) {
    ordered_json j;
    j["verdict"] = to_string(cert.verdict.conclusion);
    j["over_field"] = cert.verdict.over_field;
    j["theorem"] = to_string(cert.verdict.theorem_used);
    j["evidence"] = evidence_json(cert.evidence);
    j["assumptions"] = assumptions_json(cert.assumptions);
    j["inputs_digest"] = cert.inputs_digest;
    return j;
}

ordered_json check_report_json(const Certificate& cert, const ReportMeta& meta) {
    ordered_json j;
    j["version"] = kToolVersion;
    j["job_digest"] = meta.job_digest;
    j["verdict"] = to_string(cert.verdict.conclusion);
    j["over_field"] = cert.verdict.over_field;
    j["theorem"] = to_string(cert.verdict.theorem_used);
    j["evidence"] = evidence_json(cert.evidence);
    j["assumptions"] = assumptions_json(cert.assumptions);
    j["timing_ms"] = meta.timing_ms;
    j["seed"] = meta.seed;
    j["precision_bits"] = meta.precision_bits;
    return j;
}

std::string check_report_text(const Certificate& cert, const ReportMeta& meta) {
    std::ostringstream out;
    out << "verdict:     " << to_string(cert.verdict.conclusion) << "\n";
    out << "over field:  " << cert.verdict.over_field << "\n";
    out << "theorem:     " << to_string(cert.verdict.theorem_used) << "\n";
    switch (cert.evidence.kind) {
        case Evidence::Kind::Witness: {
            out << "evidence:    nonzero witness for det = " << cert.evidence.det_print << "\n";
            out << "  at point:  ";
            bool first = true;
            for (const auto& [var, val] : cert.evidence.witness) {
                if (!first) out << ", ";
                out << var << " = " << val.to_string();
                first = false;
            }
            out << "\n  value:     " << (cert.evidence.witness_value ? cert.evidence.witness_value->to_string() : "")
                << "\n";
            break;
        }
        case Evidence::Kind::Interval: {
            out << "evidence:    determinant enclosure ";
            if (cert.evidence.det_interval) {
                out << cert.evidence.det_interval->to_string();
                if (auto dec = cert.evidence.det_interval->decimal_string(18)) out << " ~ " << *dec << "...";
            }
            out << "\n  widths:    ";
            for (std::size_t i = 0; i < cert.evidence.interval_widths.size(); ++i)
                out << (i ? ", " : "") << cert.evidence.interval_widths[i].to_string();
            out << "\n";
            break;
        }
        case Evidence::Kind::ZeroExpansion:
            out << "evidence:    determinant expands to the zero polynomial\n";
            break;
    }
    out << "assumptions:\n";
    for (const auto& a : cert.assumptions) out << "  - " << a.text << " [" << a.source << "]\n";
    out << "job digest:  " << meta.job_digest << "\n";
    out << "seed:        " << meta.seed << "\n";
    out << "precision:   " << meta.precision_bits << " bits\n";
    return out.str();
}

ordered_json case_report_json(const CaseReport& report, const ReportMeta& meta) {
    ordered_json j;
    j["version"] = kToolVersion;
    j["case"] = report.case_id;
    j["status"] = to_string(report.status);
    ordered_json values = ordered_json::object();
    for (const auto& v : report.values) values[v.name] = enclosure_json(v.value);
    j["values"] = values;
    ordered_json residuals = ordered_json::object();
    for (const auto& r : report.residuals) residuals[r.name] = enclosure_json(r.value);
    j["residuals"] = residuals;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.passed}});
    j["checks"] = checks;
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(certificate_json(v));
    j["verdicts"] = verdicts;
    j["timing_ms"] = meta.timing_ms;
    j["seed"] = meta.seed;
    j["precision_bits"] = meta.precision_bits;
    return j;
}

std::string case_report_text(const CaseReport& report, const ReportMeta& meta) {
    std::ostringstream out;
    out << "case:   " << report.case_id << "\n";
    for (const auto& v : report.values) {
        out << "  " << v.name << " = ";
        if (auto dec = v.value.decimal_string(24))
            out << *dec << "...";
        else
            out << v.value.to_string();
        out << "\n";
    }
    for (const auto& r : report.residuals)
        out << "  residual " << r.name << ": " << (r.value.contains_zero() ? "encloses 0" : "EXCLUDES 0") << "\n";
    for (const auto& c : report.checks) out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << "\n";
    for (const auto& v : report.verdicts)
        out << "  verdict: " << to_string(v.verdict.conclusion) << " over " << v.verdict.over_field << " ("
            << to_string(v.verdict.theorem_used) << ")\n";
    out << "status: " << to_string(report.status) << "\n";
    out << "precision: " << meta.precision_bits << " bits, seed " << meta.seed << "\n";
    return out.str();
}

ordered_json error_json(const std::string& type, const std::string& message, int exit_code) {
    ordered_json j;
    j["version"] = kToolVersion;
    j["error"] = {{"type", type}, {"message", message}};
    j["exit_code"] = exit_code;
    return j;
}

} // namespace algind
