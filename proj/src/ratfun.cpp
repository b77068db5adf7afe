#include "algind/ratfun.hpp"

namespace algind {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw StructuralError("mismatched variable lists");
    if (den_.is_zero()) throw ArithmeticError("zero denominator polynomial");
    normalize();
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    Polynomial one = Polynomial::constant(p.vars(), Rational(1));
    return RationalFunction(std::move(p), std::move(one));
}

RationalFunction RationalFunction::constant(std::vector<std::string> vars, Rational c) {
    return from_polynomial(Polynomial::constant(std::move(vars), std::move(c)));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars(), Rational(1));
        return;
    }
    Rational factor = den_.content();
    if (den_.leading_coeff().sign() < 0) factor = -factor;
    if (!factor.is_one()) {
        Rational inv = factor.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::pow(unsigned long e) const {
    RationalFunction acc = constant(vars(), Rational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

RationalFunction RationalFunction::partial(const std::string& var) const {
    Polynomial dn = num_.partial(var) * den_ - num_ * den_.partial(var);
    return RationalFunction(std::move(dn), den_ * den_);
}

Rational RationalFunction::eval_exact(const std::vector<Rational>& point) const {
    Rational d = den_.eval_exact(point);
    if (d.is_zero()) throw ArithmeticError("denominator vanishes at the evaluation point");
    return num_.eval_exact(point) / d;
}

bool RationalFunction::equals(const RationalFunction& other) const {
    return (num_ * other.den_) == (other.num_ * den_);
}

} // namespace algind
