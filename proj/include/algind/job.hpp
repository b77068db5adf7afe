#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algind/enclosure.hpp"
#include "algind/ratfun.hpp"

namespace algind {

enum class JobMode { Implicit, PolynomialMap, RationalMap, Partial };

std::string to_string(JobMode mode);

/// A fully validated problem instance. Equations are stored uniformly as
/// rational functions (polynomials have denominator 1); implicit and partial
/// modes range over x_vars followed by y_vars, map modes over x_vars only.
struct JobSpec {
    JobMode mode = JobMode::PolynomialMap;
    std::vector<std::string> x_vars;
    std::vector<std::string> y_vars;
    std::size_t m = 0; // partial mode only
    std::vector<RationalFunction> equations;
    std::optional<PointAssignment> point;
    std::vector<std::string> assumptions;
    std::optional<std::uint64_t> seed;
    long precision_bits = 128;

    std::size_t n() const { return x_vars.size(); }
    /// Variable list the equations are parsed over.
    std::vector<std::string> equation_vars() const;

    bool operator==(const JobSpec& other) const;
};

/// Parses and validates a JSON job document. Keys: "mode", "x_vars",
/// "y_vars", "m" (partial mode only), "equations", "point", "assumptions",
/// "seed", "precision_bits"; unknown keys are rejected. Point enclosures
/// accept {"mid": "p/q", "rad": "p/q"} or a decimal string whose radius is
/// one unit in the last printed place.
JobSpec parse_job(const std::string& text);

/// Deterministic JSON rendering; parse_job(format_canonical(job)) == job.
std::string format_canonical(const JobSpec& job);

/// Content hash (FNV-1a over the canonical form), 16 hex digits.
std::string job_digest(const JobSpec& job);

} // namespace algind
