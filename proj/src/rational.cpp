#include "algind/rational.hpp"

#include <cctype>

namespace algind {

Int::Int(const std::string& decimal) {
    mpz_init(z_);
    if (decimal.empty() || mpz_set_str(z_, decimal.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw ValidationError("not an integer literal: '" + decimal + "'");
    }
}

std::string Int::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw ArithmeticError("zero denominator");
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational::Rational(const Int& num, const Int& den) {
    mpq_init(q_);
    if (den.is_zero()) throw ArithmeticError("zero denominator");
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational Rational::from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ValidationError("empty rational literal");

    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string body = s.substr(pos);
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string np = body.substr(0, slash), dp = body.substr(slash + 1);
        if (!all_digits(np) || !all_digits(dp)) throw ValidationError("not a rational literal: '" + text + "'");
        Int n(np), d(dp);
        if (d.is_zero()) throw ValidationError("zero denominator in '" + text + "'");
        value = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
            throw ValidationError("not a decimal literal: '" + text + "'");
        Int scaled(ip + fp);
        Int scale = Int(10).pow(fp.size());
        value = Rational(scaled, scale);
    } else {
        if (!all_digits(body)) throw ValidationError("not a rational literal: '" + text + "'");
        value = Rational(Int(body));
    }
    return negative ? -value : value;
}

Rational Rational::pow2(long k) {
    Rational r(1);
    if (k >= 0)
        mpq_mul_2exp(r.q_, r.q_, static_cast<unsigned long>(k));
    else
        mpq_div_2exp(r.q_, r.q_, static_cast<unsigned long>(-k));
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Int Rational::scaled_floor_pow10(unsigned digits) const {
    Int scale = Int(10).pow(digits);
    Int scaled_num = num() * scale;
    return Int::fdiv_qr(scaled_num, den()).first;
}

std::string Rational::to_string() const {
    if (is_integer()) return num().to_string();
    return num().to_string() + "/" + den().to_string();
}

} // namespace algind
