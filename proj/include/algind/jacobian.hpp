#pragma once

#include <vector>

#include "algind/ratfun.hpp"

namespace algind {

/// Dense matrix of rational functions. Entry (j, i) holds the partial
/// derivative of equation j with respect to variable i: j indexes rows,
/// i columns.
struct SymbolicMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<RationalFunction> entries; // row-major
    std::vector<std::string> vars;         // shared variable list of the entries

    const RationalFunction& at(std::size_t j, std::size_t i) const { return entries[j * cols + i]; }
    RationalFunction& at(std::size_t j, std::size_t i) { return entries[j * cols + i]; }
    bool is_square() const { return rows == cols; }
};

/// Denominator-cleared Jacobian of a rational map R_j = T_j / U_j:
/// numerators[j][i] = dT_j/dX_i * U_j - T_j * dU_j/dX_i, so that
/// det(Jacobian) * prod(U_j^2) = det(numerators).
struct ClearedJacobian {
    std::size_t n = 0;
    std::vector<Polynomial> numerators; // row-major n*n
    std::vector<Polynomial> denominators;

    const Polynomial& num_at(std::size_t j, std::size_t i) const { return numerators[j * n + i]; }
};

/// Jacobian of a map y_j = R_j(x); every right-hand side must range over
/// exactly x_vars and arity must match.
SymbolicMatrix jacobian_of_map(const std::vector<RationalFunction>& rhs, const std::vector<std::string>& x_vars);

/// Jacobian of an implicit system f_j(x, y) = 0, differentiated with respect
/// to x_vars only; entries remain polynomials in both x and y variables.
SymbolicMatrix jacobian_implicit(const std::vector<Polynomial>& eqs, const std::vector<std::string>& x_vars);

enum class DetMethod { Cofactor, Bareiss, Auto };

/// Exact symbolic determinant. Auto uses cofactor expansion up to 3x3 and
/// fraction-free Bareiss elimination beyond; the two methods agree exactly.
RationalFunction determinant(const SymbolicMatrix& mat, DetMethod method = DetMethod::Auto);

ClearedJacobian cleared_jacobian(const std::vector<RationalFunction>& rhs, const std::vector<std::string>& x_vars);

/// Wraps cleared numerators as a denominator-1 symbolic matrix.
SymbolicMatrix cleared_matrix(const ClearedJacobian& cj, const std::vector<std::string>& x_vars);

} // namespace algind
