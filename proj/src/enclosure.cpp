#include "algind/enclosure.hpp"

#include <algorithm>

namespace algind {

namespace {

bool is_power_of_two(const Int& v) { return mpz_popcount(v.raw()) == 1; }

// True when x is already a dyadic with at most ~bits significant bits.
bool already_rounded(const Rational& x, long bits) {
    return is_power_of_two(x.den()) && static_cast<long>(x.num().bit_length()) <= bits + 2;
}

Rational dyadic_from(const Int& m, long k) {
    if (k >= 0) return Rational(m, Int::pow2(static_cast<unsigned long>(k)));
    return Rational(m.shifted_left(static_cast<unsigned long>(-k)));
}

} // namespace

std::pair<Rational, Rational> dyadic_round_nearest(const Rational& x, long bits) {
    if (bits <= 0 || x.is_zero() || already_rounded(x, bits)) return {x, Rational(0)};
    Int num = x.num(), den = x.den();
    long e = static_cast<long>(num.bit_length()) - static_cast<long>(den.bit_length());
    long k = bits - e;
    Int num2 = k >= 0 ? num.shifted_left(static_cast<unsigned long>(k)) : std::move(num);
    Int den2 = k >= 0 ? std::move(den) : den.shifted_left(static_cast<unsigned long>(-k));
    auto [q, r] = Int::fdiv_qr(num2, den2);
    if (r + r >= den2) q += Int(1);
    return {dyadic_from(q, k), Rational::pow2(-k - 1)};
}

Rational dyadic_round_up(const Rational& x, long bits) {
    if (bits <= 0 || x.is_zero() || already_rounded(x, bits)) return x;
    Int num = x.num(), den = x.den();
    long e = static_cast<long>(num.bit_length()) - static_cast<long>(den.bit_length());
    long k = bits - e;
    Int num2 = k >= 0 ? num.shifted_left(static_cast<unsigned long>(k)) : std::move(num);
    Int den2 = k >= 0 ? std::move(den) : den.shifted_left(static_cast<unsigned long>(-k));
    auto [q, r] = Int::fdiv_qr(num2, den2);
    if (!r.is_zero()) q += Int(1);
    return dyadic_from(q, k);
}

Enclosure::Enclosure(Rational mid, Rational rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (rad_.sign() < 0) throw StructuralError("enclosure radius must be nonnegative");
}

Enclosure Enclosure::from_endpoints(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw InternalError("enclosure endpoints out of order");
    Rational half(1, 2);
    return Enclosure((lo + hi) * half, (hi - lo) * half);
}

std::string Enclosure::to_string() const {
    if (rad_.is_zero()) return mid_.to_string();
    return mid_.to_string() + " +/- " + rad_.to_string();
}

std::optional<std::string> Enclosure::decimal_string(unsigned max_digits) const {
    Rational lo = lower(), hi = upper();
    for (long t = static_cast<long>(max_digits); t >= 0; --t) {
        unsigned ut = static_cast<unsigned>(t);
        Int cell = lo.scaled_floor_pow10(ut);
        // Whole interval inside [cell, cell+1] * 10^-t?
        Rational cell_hi = Rational(cell + Int(1), Int(10).pow(ut));
        if (hi > cell_hi) continue;
        bool neg = cell.sign() < 0;
        std::string digits = cell.abs().to_string();
        if (digits.size() <= ut) digits.insert(0, ut + 1 - digits.size(), '0');
        std::string out = neg ? "-" : "";
        out += digits.substr(0, digits.size() - ut);
        if (ut > 0) {
            out += '.';
            out += digits.substr(digits.size() - ut);
        }
        return out;
    }
    return std::nullopt;
}

Enclosure enc_round(const Enclosure& a, long prec_bits) {
    if (prec_bits <= 0) return a;
    auto [m, err] = dyadic_round_nearest(a.mid(), prec_bits);
    return Enclosure(std::move(m), dyadic_round_up(a.rad() + err, prec_bits));
}

namespace {

bool exactly(const Enclosure& e, long v) { return e.is_exact() && e.mid() == Rational(v); }

} // namespace

Enclosure enc_add(const Enclosure& a, const Enclosure& b, long prec_bits) {
    if (exactly(a, 0)) return b;
    if (exactly(b, 0)) return a;
    return enc_round(Enclosure(a.mid() + b.mid(), a.rad() + b.rad()), prec_bits);
}

Enclosure enc_sub(const Enclosure& a, const Enclosure& b, long prec_bits) {
    if (exactly(b, 0)) return a;
    if (exactly(a, 0)) return enc_neg(b);
    return enc_round(Enclosure(a.mid() - b.mid(), a.rad() + b.rad()), prec_bits);
}

Enclosure enc_mul(const Enclosure& a, const Enclosure& b, long prec_bits) {
    if (exactly(a, 0) || exactly(b, 0)) return Enclosure();
    if (exactly(a, 1)) return b;
    if (exactly(b, 1)) return a;
    Rational rad = a.mid().abs() * b.rad() + b.mid().abs() * a.rad() + a.rad() * b.rad();
    return enc_round(Enclosure(a.mid() * b.mid(), std::move(rad)), prec_bits);
}

Enclosure enc_div(const Enclosure& a, const Enclosure& b, long prec_bits) {
    if (b.contains_zero()) throw ArithmeticError("interval division by an interval containing zero");
    Rational al = a.lower(), au = a.upper(), bl = b.lower(), bu = b.upper();
    Rational q1 = al / bl, q2 = al / bu, q3 = au / bl, q4 = au / bu;
    Rational lo = std::min(std::min(q1, q2), std::min(q3, q4));
    Rational hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return enc_round(Enclosure::from_endpoints(lo, hi), prec_bits);
}

Enclosure enc_neg(const Enclosure& a) { return Enclosure(-a.mid(), a.rad()); }

Enclosure enc_scale(const Rational& c, const Enclosure& a, long prec_bits) {
    return enc_round(Enclosure(c * a.mid(), c.abs() * a.rad()), prec_bits);
}

Enclosure enc_pow(const Enclosure& a, unsigned long e, long prec_bits) {
    Enclosure acc(Rational(1));
    Enclosure base = a;
    while (e > 0) {
        if (e & 1) acc = enc_mul(acc, base, prec_bits);
        if (e >>= 1) base = enc_mul(base, base, prec_bits);
    }
    return acc;
}

const Enclosure& PointAssignment::at(const std::string& var) const {
    auto it = bindings.find(var);
    if (it == bindings.end()) throw StructuralError("unbound variable '" + var + "'");
    return it->second;
}

bool PointAssignment::all_exact() const {
    return std::all_of(bindings.begin(), bindings.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

Enclosure poly_eval(const Polynomial& p, const PointAssignment& point, long prec_bits) {
    const auto& vars = p.vars();
    std::vector<const Enclosure*> vals;
    vals.reserve(vars.size());
    bool exact = true;
    for (const auto& v : vars) {
        vals.push_back(&point.at(v));
        exact = exact && vals.back()->is_exact();
    }
    if (exact) {
        std::vector<Rational> pt;
        pt.reserve(vars.size());
        for (const auto* e : vals) pt.push_back(e->mid());
        return Enclosure(p.eval_exact(pt));
    }

    // Per-variable power tables up to the maximal exponent in use.
    std::vector<std::vector<Enclosure>> powers(vars.size());
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= powers[i].size()) powers[i].resize(e[i] + 1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (powers[i].empty()) continue;
        powers[i][0] = Enclosure(Rational(1));
        for (std::size_t k = 1; k < powers[i].size(); ++k)
            powers[i][k] = enc_mul(powers[i][k - 1], *vals[i], prec_bits);
    }

    Enclosure total;
    for (const auto& [e, c] : p.terms()) {
        Enclosure term(Rational(1));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = enc_mul(term, powers[i][e[i]], prec_bits);
        total = enc_add(total, enc_scale(c, term, prec_bits), prec_bits);
    }
    return total;
}

Enclosure ratfun_eval(const RationalFunction& r, const PointAssignment& point, long prec_bits) {
    Enclosure den = poly_eval(r.den(), point, prec_bits);
    if (den.contains_zero()) throw ArithmeticError("denominator interval contains zero");
    return enc_div(poly_eval(r.num(), point, prec_bits), den, prec_bits);
}

namespace {

Enclosure det_rec(const std::vector<Enclosure>& m, std::size_t n, std::vector<std::size_t>& cols,
                  std::size_t row, long prec) {
    if (cols.size() == 1) return m[row * n + cols[0]];
    Enclosure total;
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        std::size_t c = cols[pick];
        cols.erase(cols.begin() + static_cast<long>(pick));
        Enclosure minor = det_rec(m, n, cols, row + 1, prec);
        cols.insert(cols.begin() + static_cast<long>(pick), c);
        Enclosure contrib = enc_mul(m[row * n + c], minor, prec);
        total = (pick % 2 == 0) ? enc_add(total, contrib, prec) : enc_sub(total, contrib, prec);
    }
    return total;
}

} // namespace

Enclosure enclosure_determinant(const std::vector<Enclosure>& entries, std::size_t n, long prec_bits) {
    if (entries.size() != n * n) throw StructuralError("matrix entry count does not match dimension");
    if (n == 0) return Enclosure(Rational(1));
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_rec(entries, n, cols, 0, prec_bits);
}

} // namespace algind
