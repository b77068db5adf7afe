#include "algind/polynomial.hpp"

#include <algorithm>

#include "algind/ratfun.hpp"

namespace algind {

Polynomial Polynomial::constant(std::vector<std::string> vars, Rational c) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, const std::string& name) {
    Polynomial p(vars);
    Exponents e(vars.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents exps, Rational coeff) {
    Polynomial p(std::move(vars));
    if (exps.size() != p.vars_.size()) throw StructuralError("exponent vector length does not match variable list");
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

std::size_t Polynomial::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw StructuralError("unknown variable '" + name + "'");
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw StructuralError("polynomial is not constant");
    return terms_.begin()->second;
}

unsigned long Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.begin()->first; // leading term has maximal degree
    return std::accumulate(e.begin(), e.end(), 0ul);
}

void Polynomial::insert_term(const Exponents& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) throw StructuralError("mismatched variable lists");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_vars(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_vars(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_vars(a, b);
    Polynomial r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial acc = Polynomial::constant(vars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::partial(const std::string& var) const {
    std::size_t i = var_index(var);
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents de = e;
        de[i] -= 1;
        r.insert_term(de, c * Rational(static_cast<long>(e[i])));
    }
    return r;
}

Rational Polynomial::eval_exact(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw StructuralError("point arity does not match variable list");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(static_cast<long>(e[i]));
        total += t;
    }
    return total;
}

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw StructuralError("zero polynomial has no leading term");
    return *terms_.begin();
}

Rational Polynomial::leading_coeff() const { return leading_term().second; }

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = Int::gcd(num_gcd, c.num().abs());
        den_lcm = Int::lcm(den_lcm, c.den());
    }
    return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& new_vars) const {
    std::vector<long> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = 0; j < new_vars.size(); ++j)
            if (new_vars[j] == vars_[i]) {
                where[i] = static_cast<long>(j);
                break;
            }
    }
    Polynomial r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw StructuralError("variable '" + vars_[i] + "' missing from the target variable list");
            ne[static_cast<std::size_t>(where[i])] = e[i];
        }
        r.insert_term(ne, c);
    }
    return r;
}

RationalFunction Polynomial::substitute(const std::map<std::string, RationalFunction>& repl) const {
    if (repl.empty()) throw StructuralError("substitution map is empty");
    const std::vector<std::string>& target = repl.begin()->second.vars();
    for (const auto& [name, rf] : repl)
        if (rf.vars() != target) throw StructuralError("substitution values disagree on variable lists");

    std::vector<RationalFunction> images;
    images.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = repl.find(v);
        if (it != repl.end())
            images.push_back(it->second);
        else
            images.push_back(RationalFunction::from_polynomial(Polynomial::variable(target, v)));
    }

    RationalFunction total = RationalFunction::constant(target, Rational(0));
    for (const auto& [e, c] : terms_) {
        RationalFunction term = RationalFunction::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * images[i].pow(e[i]);
        total = total + term;
    }
    return total;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    Polynomial quotient(a.vars());
    Polynomial rem = a;
    const auto& [eb, cb] = b.leading_term();
    while (!rem.is_zero()) {
        const auto& [er, cr] = rem.leading_term();
        Exponents q(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eb[i]) throw InternalError("polynomial division is not exact");
            q[i] = er[i] - eb[i];
        }
        Polynomial t = Polynomial::monomial(a.vars(), q, cr / cb);
        quotient = quotient + t;
        rem = rem - t * b;
    }
    return quotient;
}

} // namespace algind
