#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algind/enclosure.hpp"
#include "algind/job.hpp"
#include "algind/zerotest.hpp"

namespace algind {

/// An unverified hypothesis a verdict is conditional on.
struct AssumptionRecord {
    std::string text;
    std::string source;
};

enum class Conclusion { Independent, Dependent, Inconclusive };
enum class TheoremTag { T1, T2, T3, T4 };

std::string to_string(Conclusion c);
std::string to_string(TheoremTag t);

struct Verdict {
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string over_field = "Q";
    TheoremTag theorem_used = TheoremTag::T1;
};

/// Re-checkable evidence backing a verdict: either an exact witness point
/// for a nonzero symbolic determinant, an interval enclosure of the
/// determinant at the job's point, or the fact that the expanded
/// determinant has an empty term map.
struct Evidence {
    enum class Kind { Witness, Interval, ZeroExpansion };
    Kind kind = Kind::ZeroExpansion;
    std::string det_print; // truncated canonical form of the symbolic determinant
    std::map<std::string, Rational> witness;
    std::optional<Rational> witness_value;
    std::optional<Enclosure> det_interval;
    std::vector<Rational> interval_widths; // width achieved at each attempted precision
    long eval_precision_bits = 0;          // precision of the final interval evaluation
};

struct Certificate {
    Verdict verdict;
    Evidence evidence;
    std::vector<AssumptionRecord> assumptions;
    std::string inputs_digest;
};

struct CheckOptions {
    std::optional<std::uint64_t> seed; // overrides the job's seed
    std::uint64_t budget = 64;
};

/// y_j = T_j(x) with polynomial right-hand sides: a nonzero Jacobian
/// determinant proves independence, an identically zero one proves
/// dependence. Never Inconclusive.
Certificate check_polynomial_map(const JobSpec& job, const CheckOptions& opts = {});

/// y_j = R_j(x) with rational right-hand sides, decided through the
/// denominator-cleared determinant. An identically zero determinant is
/// Inconclusive: necessity is only available for polynomial maps.
Certificate check_rational_map(const JobSpec& job, const CheckOptions& opts = {});

/// Implicit system f_j(x, y) = 0 evaluated at the bound point. Requires the
/// residual enclosures to contain 0; retries once at doubled precision when
/// the determinant enclosure contains 0 but is narrower than 2^-16.
Certificate check_implicit(const JobSpec& job, const CheckOptions& opts = {});

/// Partial system of m < n equations; independence is established over the
/// extension field generated by the remaining x variables.
Certificate check_partial(const JobSpec& job, const CheckOptions& opts = {});

/// Dispatches on the job's mode.
Certificate run_check(const JobSpec& job, const CheckOptions& opts = {});

/// Independent checker: rebuilds the matrix from the job and re-evaluates
/// the stored evidence.
bool recheck_certificate(const JobSpec& job, const Certificate& cert);

} // namespace algind
