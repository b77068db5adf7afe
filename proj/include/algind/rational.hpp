#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "algind/error.hpp"

namespace algind {

/// Arbitrary-precision integer (value type over GMP's mpz).
class Int {
  public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); } // NOLINT: implicit by design
    explicit Int(const std::string& decimal);

    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }
    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }

    friend int cmp(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_); }
    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    Int pow(unsigned long e) const {
        Int r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }
    static Int gcd(const Int& a, const Int& b) {
        Int r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static Int lcm(const Int& a, const Int& b) {
        Int r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static Int binomial(unsigned long n, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }
    static Int pow2(unsigned long k) {
        Int r(1);
        mpz_mul_2exp(r.z_, r.z_, k);
        return r;
    }

    /// Exact quotient; caller guarantees divisibility.
    static Int divexact(const Int& a, const Int& b) {
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    /// Floor quotient and remainder, remainder in [0, |b|).
    static std::pair<Int, Int> fdiv_qr(const Int& a, const Int& b) {
        Int q, r;
        mpz_fdiv_qr(q.z_, r.z_, a.z_, b.z_);
        return {std::move(q), std::move(r)};
    }

    Int shifted_left(unsigned long k) const {
        Int r;
        mpz_mul_2exp(r.z_, z_, k);
        return r;
    }
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }

    bool is_perfect_square() const { return mpz_perfect_square_p(z_) != 0; }
    Int sqrt_floor() const {
        Int r;
        mpz_sqrt(r.z_, z_);
        return r;
    }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    std::string to_string() const;

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    mpz_t z_;
};

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero stored as 0/1.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) { // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);
    explicit Rational(const Int& num) {
        mpq_init(q_);
        mpq_set_z(q_, num.raw());
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Accepts "p", "-p", "p/q" and decimal strings like "-2.075".
    static Rational from_string(const std::string& text);

    /// 2^k for any (possibly negative) k.
    static Rational pow2(long k);

    Int num() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Int den() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    /// Integer exponent; negative exponents invert (error on zero base).
    Rational pow(long e) const;

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    friend int cmp(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    /// floor(x * 10^digits) as an exact integer.
    Int scaled_floor_pow10(unsigned digits) const;

    std::string to_string() const;

  private:
    mpq_t q_;
};

} // namespace algind
