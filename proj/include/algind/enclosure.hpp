#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algind/polynomial.hpp"
#include "algind/ratfun.hpp"

namespace algind {

/// Certified midpoint-radius interval [mid - rad, mid + rad] with exact
/// rational components. All arithmetic is outward-conservative: the result
/// contains every pointwise result of the operand intervals. Operations
/// taking prec_bits > 0 round the midpoint to a dyadic rational with about
/// that many significant bits, folding the rounding error into the radius;
/// prec_bits == 0 keeps everything exact.
class Enclosure {
  public:
    Enclosure() : mid_(0), rad_(0) {}
    explicit Enclosure(Rational exact) : mid_(std::move(exact)), rad_(0) {}
    Enclosure(Rational mid, Rational rad);

    static Enclosure from_endpoints(const Rational& lo, const Rational& hi);

    const Rational& mid() const { return mid_; }
    const Rational& rad() const { return rad_; }
    Rational lower() const { return mid_ - rad_; }
    Rational upper() const { return mid_ + rad_; }
    Rational width() const { return rad_ + rad_; }
    /// Largest absolute value over the interval.
    Rational abs_upper() const { return mid_.abs() + rad_; }

    bool is_exact() const { return rad_.is_zero(); }
    bool contains_zero() const { return mid_.abs() <= rad_; }
    bool excludes_zero() const { return !contains_zero(); }
    bool contains(const Rational& v) const { return (v - mid_).abs() <= rad_; }
    bool contained_in(const Enclosure& outer) const {
        return lower() >= outer.lower() && upper() <= outer.upper();
    }

    std::string to_string() const;
    /// Certified decimal prefix: the longest truncation (at most max_digits
    /// fractional digits) whose one-ulp cell contains the whole interval,
    /// or empty when even the integer part is not pinned down.
    std::optional<std::string> decimal_string(unsigned max_digits) const;

  private:
    Rational mid_;
    Rational rad_;
};

/// Nearest dyadic with roughly `bits` significant bits; second component
/// bounds the absolute rounding error.
std::pair<Rational, Rational> dyadic_round_nearest(const Rational& x, long bits);
/// Upward dyadic rounding for radii (x must be >= 0).
Rational dyadic_round_up(const Rational& x, long bits);

Enclosure enc_round(const Enclosure& a, long prec_bits);
Enclosure enc_add(const Enclosure& a, const Enclosure& b, long prec_bits);
Enclosure enc_sub(const Enclosure& a, const Enclosure& b, long prec_bits);
Enclosure enc_mul(const Enclosure& a, const Enclosure& b, long prec_bits);
Enclosure enc_div(const Enclosure& a, const Enclosure& b, long prec_bits);
Enclosure enc_neg(const Enclosure& a);
Enclosure enc_scale(const Rational& c, const Enclosure& a, long prec_bits);
Enclosure enc_pow(const Enclosure& a, unsigned long e, long prec_bits);

/// The numeric values a job binds to its variables.
struct PointAssignment {
    std::map<std::string, Enclosure> bindings;

    const Enclosure& at(const std::string& var) const;
    bool binds(const std::string& var) const { return bindings.count(var) != 0; }
    bool all_exact() const;
};

/// Interval evaluation; exact (radius 0) whenever every binding is exact.
Enclosure poly_eval(const Polynomial& p, const PointAssignment& point, long prec_bits);
Enclosure ratfun_eval(const RationalFunction& r, const PointAssignment& point, long prec_bits);

/// Determinant of a square matrix of enclosures by cofactor expansion
/// (division-free, hence safe for intervals straddling zero).
Enclosure enclosure_determinant(const std::vector<Enclosure>& entries, std::size_t n, long prec_bits);

} // namespace algind
