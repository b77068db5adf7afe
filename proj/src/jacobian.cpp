#include "algind/jacobian.hpp"

namespace algind {

SymbolicMatrix jacobian_of_map(const std::vector<RationalFunction>& rhs, const std::vector<std::string>& x_vars) {
    if (rhs.size() != x_vars.size())
        throw ValidationError("arity mismatch: " + std::to_string(rhs.size()) + " right-hand sides for " +
                              std::to_string(x_vars.size()) + " variables");
    SymbolicMatrix mat;
    mat.rows = mat.cols = rhs.size();
    mat.vars = x_vars;
    mat.entries.reserve(mat.rows * mat.cols);
    for (const auto& r : rhs) {
        if (r.vars() != x_vars) throw StructuralError("right-hand side ranges over a different variable list");
        for (const auto& v : x_vars) mat.entries.push_back(r.partial(v));
    }
    return mat;
}

SymbolicMatrix jacobian_implicit(const std::vector<Polynomial>& eqs, const std::vector<std::string>& x_vars) {
    if (eqs.size() != x_vars.size())
        throw ValidationError("arity mismatch: " + std::to_string(eqs.size()) + " equations for " +
                              std::to_string(x_vars.size()) + " differentiation variables");
    SymbolicMatrix mat;
    mat.rows = mat.cols = eqs.size();
    mat.entries.reserve(mat.rows * mat.cols);
    for (const auto& f : eqs) {
        mat.vars = f.vars();
        for (const auto& v : x_vars) mat.entries.push_back(RationalFunction::from_polynomial(f.partial(v)));
    }
    return mat;
}

namespace {

RationalFunction cofactor_det(const SymbolicMatrix& mat, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.size() == 1) return mat.at(row, cols[0]);
    RationalFunction total = RationalFunction::constant(mat.vars, Rational(0));
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        const RationalFunction& pivot = mat.at(row, cols[pick]);
        if (pivot.is_zero()) continue;
        std::size_t c = cols[pick];
        cols.erase(cols.begin() + static_cast<long>(pick));
        RationalFunction minor = cofactor_det(mat, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(pick), c);
        RationalFunction contrib = pivot * minor;
        total = (pick % 2 == 0) ? total + contrib : total - contrib;
    }
    return total;
}

RationalFunction bareiss_det(const SymbolicMatrix& mat) {
    const std::size_t n = mat.rows;
    // Clear each row by the product of its entry denominators, then run
    // fraction-free elimination on the resulting polynomial matrix.
    std::vector<Polynomial> m;
    m.reserve(n * n);
    Polynomial row_dens_product = Polynomial::constant(mat.vars, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Polynomial> prefix(n + 1), suffix(n + 1);
        prefix[0] = Polynomial::constant(mat.vars, Rational(1));
        for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * mat.at(j, i).den();
        suffix[n] = Polynomial::constant(mat.vars, Rational(1));
        for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * mat.at(j, i).den();
        for (std::size_t i = 0; i < n; ++i) m.push_back(mat.at(j, i).num() * (prefix[i] * suffix[i + 1]));
        row_dens_product = row_dens_product * prefix[n];
    }

    int sign = 1;
    Polynomial prev = Polynomial::constant(mat.vars, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && m[pivot_row * n + k].is_zero()) ++pivot_row;
        if (pivot_row == n) return RationalFunction::constant(mat.vars, Rational(0));
        if (pivot_row != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(m[pivot_row * n + i], m[k * n + i]);
            sign = -sign;
        }
        const Polynomial& pivot = m[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c)
                m[r * n + c] = divide_exact(m[r * n + c] * pivot - m[r * n + k] * m[k * n + c], prev);
            m[r * n + k] = Polynomial(mat.vars);
        }
        prev = pivot;
    }
    Polynomial det = m[(n - 1) * n + (n - 1)];
    if (sign < 0) det = -det;
    return RationalFunction(std::move(det), std::move(row_dens_product));
}

} // namespace

RationalFunction determinant(const SymbolicMatrix& mat, DetMethod method) {
    if (!mat.is_square()) throw ValidationError("determinant of a non-square matrix");
    if (mat.rows == 0) return RationalFunction::constant(mat.vars, Rational(1));
    if (method == DetMethod::Auto) method = mat.rows <= 3 ? DetMethod::Cofactor : DetMethod::Bareiss;
    if (method == DetMethod::Cofactor) {
        std::vector<std::size_t> cols(mat.cols);
        for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        return cofactor_det(mat, cols, 0);
    }
    return bareiss_det(mat);
}

ClearedJacobian cleared_jacobian(const std::vector<RationalFunction>& rhs, const std::vector<std::string>& x_vars) {
    if (rhs.size() != x_vars.size())
        throw ValidationError("arity mismatch: " + std::to_string(rhs.size()) + " right-hand sides for " +
                              std::to_string(x_vars.size()) + " variables");
    ClearedJacobian cj;
    cj.n = rhs.size();
    cj.numerators.reserve(cj.n * cj.n);
    for (const auto& r : rhs) {
        if (r.vars() != x_vars) throw StructuralError("right-hand side ranges over a different variable list");
        if (r.den().is_zero()) throw ValidationError("denominator is identically zero");
        for (const auto& v : x_vars)
            cj.numerators.push_back(r.num().partial(v) * r.den() - r.num() * r.den().partial(v));
        cj.denominators.push_back(r.den());
    }
    return cj;
}

SymbolicMatrix cleared_matrix(const ClearedJacobian& cj, const std::vector<std::string>& x_vars) {
    SymbolicMatrix mat;
    mat.rows = mat.cols = cj.n;
    mat.vars = x_vars;
    mat.entries.reserve(cj.n * cj.n);
    for (const auto& p : cj.numerators) mat.entries.push_back(RationalFunction::from_polynomial(p));
    return mat;
}

} // namespace algind
