#pragma once

#include "algind/polynomial.hpp"

namespace algind {

/// Quotient of two polynomials over a shared variable list. The denominator
/// is never the zero polynomial and is kept content-normalized: coprime
/// integer coefficients with positive leading coefficient. No gcd reduction
/// is performed, so X1/X1 is a legitimate representation of 1; equality is
/// decided by cross-multiplication.
class RationalFunction {
  public:
    RationalFunction() = default;
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction from_polynomial(Polynomial p);
    static RationalFunction constant(std::vector<std::string> vars, Rational c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the denominator is the constant 1 (always holds after
    /// normalization whenever the denominator is constant).
    bool is_polynomial() const { return den_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction pow(unsigned long e) const;

    /// Quotient-rule partial derivative: (num' den - num den') / den^2.
    RationalFunction partial(const std::string& var) const;

    /// Exact value at a rational point; throws ArithmeticError when the
    /// denominator vanishes there.
    Rational eval_exact(const std::vector<Rational>& point) const;

    /// Semantic equality by cross-multiplication.
    bool equals(const RationalFunction& other) const;

  private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

} // namespace algind
