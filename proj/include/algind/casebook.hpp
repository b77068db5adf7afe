#pragma once

#include <string>
#include <vector>

#include "algind/criterion.hpp"
#include "algind/series.hpp"

namespace algind {

struct CaseDescriptor {
    std::string id;
    std::string title;
    std::string citation;
    bool needs_user_polynomials = false;
};

struct NamedEnclosure {
    std::string name;
    Enclosure value;
};

struct CaseCheck {
    std::string name;
    bool passed = false;
};

enum class CaseStatus { Pass, Fail, NeedsInput };

std::string to_string(CaseStatus s);

struct CaseReport {
    std::string case_id;
    std::vector<NamedEnclosure> values;
    std::vector<NamedEnclosure> residuals;
    std::vector<Certificate> verdicts;
    std::vector<CaseCheck> checks;
    CaseStatus status = CaseStatus::Fail;
};

struct CaseInputs {
    std::vector<std::string> polynomials; // expression texts, where a case accepts them
    std::uint64_t seed = 0;
    std::uint64_t budget = 64;
};

/// Catalog of built-in runnable case studies, in stable order.
std::vector<CaseDescriptor> list_cases();

/// Runs one case at the given precision. Reports are reproducible given
/// (id, precision, seed).
CaseReport run_case(const std::string& id, Precision prec, const CaseInputs& inputs = {});

/// True when the enclosure certifies the decimal digit string, i.e. it is
/// contained in the one-last-place-unit interval the digits describe.
bool digits_certified(const Enclosure& e, const std::string& digits);

} // namespace algind
