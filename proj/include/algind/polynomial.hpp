#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "algind/rational.hpp"

namespace algind {

using Exponents = std::vector<std::uint32_t>;

/// Orders exponent vectors so that map iteration visits the graded-lex
/// leading term first: higher total degree wins, ties broken by the
/// lexicographically greater vector (earlier variables weigh more).
struct GrlexLeadingFirst {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
        unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class RationalFunction;

/// Sparse multivariate polynomial over Q with a declared, ordered variable
/// list. Stored coefficients are never zero; the zero polynomial has an
/// empty term map. Term order is graded lexicographic, so printing and
/// iteration are deterministic.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rational, GrlexLeadingFirst>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, Rational c);
    static Polynomial variable(const std::vector<std::string>& vars, const std::string& name);
    static Polynomial monomial(std::vector<std::string> vars, Exponents exps, Rational coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;
    unsigned long total_degree() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned long e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal partial derivative; the variable must be declared.
    Polynomial partial(const std::string& var) const;

    /// Exact evaluation at a full rational point (values aligned with vars()).
    Rational eval_exact(const std::vector<Rational>& point) const;

    /// Leading (graded-lex greatest) term; polynomial must be nonzero.
    const std::pair<const Exponents, Rational>& leading_term() const;
    Rational leading_coeff() const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial gives 1.
    Rational content() const;

    /// Re-expresses the polynomial over a different variable list, which must
    /// contain every variable actually used.
    Polynomial with_variables(const std::vector<std::string>& new_vars) const;

    /// Replaces variables by rational functions; all replacement values must
    /// share one variable list, which also hosts the untouched variables.
    RationalFunction substitute(const std::map<std::string, RationalFunction>& repl) const;

    std::size_t var_index(const std::string& name) const; // throws StructuralError

  private:
    void insert_term(const Exponents& e, const Rational& c);
    static void require_same_vars(const Polynomial& a, const Polynomial& b);

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact quotient a/b; throws InternalError when the division is not exact.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

} // namespace algind
