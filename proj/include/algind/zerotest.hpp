#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "algind/jacobian.hpp"

namespace algind {

/// Counter-based deterministic random stream: value at index i depends only
/// on (seed, i), so parallel or out-of-order consumption cannot change
/// results.
struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t at(std::uint64_t i) const;
};

/// Outcome of deciding whether a symbolic determinant is identically zero.
/// A NonzeroWitness carries an exact rational point and the exact nonzero
/// determinant value there, which is a proof of != 0. IdenticallyZero is
/// only ever established by full symbolic expansion, never by sampling.
struct ZeroTestResult {
    enum class Status { NonzeroWitness, IdenticallyZero };
    Status status = Status::IdenticallyZero;
    std::optional<std::map<std::string, Rational>> witness;
    std::optional<Rational> witness_value;
    std::uint64_t samples_tried = 0;
    bool symbolic_expansion_used = false;
};

/// Randomized witness search with symbolic fallback. Samples integer points
/// uniformly from [-B, B]^vars with B = 2^16 and evaluates the determinant
/// exactly; samples hitting an entry denominator are redrawn (capped at
/// 10x budget) without consuming budget. Deterministic given
/// (mat, seed, budget). With the fallback disabled an exhausted budget
/// raises BudgetError.
ZeroTestResult det_zero_status(const SymbolicMatrix& mat, std::uint64_t seed, std::uint64_t budget,
                               bool allow_symbolic = true);

/// Exact, definitive zero test: true iff the canonical term map is empty.
bool poly_is_zero(const Polynomial& p);

/// Exact determinant of a square rational matrix (row-major entries).
Rational rational_determinant(std::vector<Rational> entries, std::size_t n);

} // namespace algind
