#pragma once

#include <nlohmann/json.hpp>

#include "algind/casebook.hpp"
#include "algind/criterion.hpp"

namespace algind {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportMeta {
    std::string job_digest;
    std::uint64_t seed = 0;
    std::uint64_t budget = 64;
    long precision_bits = 128;
    long timing_ms = 0;
};

nlohmann::ordered_json enclosure_json(const Enclosure& e);
nlohmann::ordered_json certificate_json(const Certificate& cert);

/// Machine report for `check`, with the documented top-level keys.
nlohmann::ordered_json check_report_json(const Certificate& cert, const ReportMeta& meta);
std::string check_report_text(const Certificate& cert, const ReportMeta& meta);

nlohmann::ordered_json case_report_json(const CaseReport& report, const ReportMeta& meta);
std::string case_report_text(const CaseReport& report, const ReportMeta& meta);

nlohmann::ordered_json error_json(const std::string& type, const std::string& message, int exit_code);

} // namespace algind
