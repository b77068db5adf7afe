#pragma once

#include <cstdint>
#include <utility>

#include "algind/enclosure.hpp"

namespace algind {

/// Target output quality: radius at most 2^-bits * max(1, |mid|).
struct Precision {
    long bits;
    explicit Precision(long b) : bits(b) {
        if (b < 8) throw ValidationError("precision must be at least 8 bits");
    }
};

/// Exact (F_n, L_n) from the shared memoized caches.
std::pair<Int, Int> fib_lucas(std::uint64_t n);

/// Exact Bernoulli number B_n (B_1 = -1/2 convention).
Rational bernoulli_number(unsigned n);

/// Reciprocal Fibonacci power sum: sum over n >= 1 of F_n^(-two_s).
Enclosure zeta_fib(unsigned two_s, Precision prec);

enum class QSeriesFamily { A, B, C };

/// Lambert-type q-series of odd order 2j+1:
///   A: sum n^(2j+1) q^(2n) / (1 - q^(2n))
///   B: alternating variant of A
///   C: sum n^(2j+1) q^n / (1 - q^(2n))
Enclosure q_series(QSeriesFamily family, unsigned order, const Rational& q, Precision prec);

enum class RamanujanFn { P, Q, R };

/// Eisenstein-type series with constant term 1 and weights -24, 240, -504.
Enclosure ramanujan(RamanujanFn which, const Rational& q, Precision prec);

/// theta(q) = 1 + 2 * sum over v >= 1 of q^(v^2), for 0 <= q < 1.
Enclosure theta(const Rational& q, Precision prec);

/// Congruence-filtered exponential series: sum of z^n/n! over n = r mod q_mod.
Enclosure exp_residue(unsigned q_mod, unsigned r, const Rational& z, Precision prec);

enum class ExpFibKind { FibPower, LucasPower, FibArith, LucasArith };

struct ExpFibParams {
    unsigned s = 1; // FibPower / LucasPower exponent
    unsigned a = 1; // FibArith / LucasArith index stride
    unsigned b = 0; // FibArith / LucasArith index offset
};

/// Exponential generating series with Fibonacci/Lucas coefficients:
/// F_n^s z^n/n!, L_n^s z^n/n!, F_(an+b) z^n/n!, L_(an+b) z^n/n!.
Enclosure exp_fib_series(ExpFibKind kind, const ExpFibParams& params, const Rational& z, Precision prec);

/// Complete elliptic integrals via the AGM: K from the monotone two-sided
/// bracket, E from the quadratically convergent c_n sum.
Enclosure elliptic_K(const Rational& k, Precision prec);
Enclosure elliptic_E(const Rational& k, Precision prec);

/// Monotone interval-argument forms (K increasing, E decreasing in k).
Enclosure elliptic_K_enc(const Enclosure& k, Precision prec);
Enclosure elliptic_E_enc(const Enclosure& k, Precision prec);

/// The unique k in (0, 1) with K(sqrt(1-k^2))/K(k) = (2/pi) * ln((1+sqrt5)/2),
/// located by certified bisection on dyadic midpoints.
Enclosure solve_modulus(Precision prec);

Enclosure pi_enclosure(Precision prec);
Enclosure ln_enclosure(const Rational& x, Precision prec);
Enclosure sqrt_enclosure(const Rational& x, Precision prec);
Enclosure exp_enclosure(const Rational& x, Precision prec);

/// Monotone endpoint extensions to interval arguments.
Enclosure sqrt_enc(const Enclosure& x, Precision prec);
Enclosure ln_enc(const Enclosure& x, Precision prec);
Enclosure exp_enc(const Enclosure& x, Precision prec);

/// AGM(1, b) for an interval 0 < b <= 1, bracketed by the monotone
/// iterate sequences.
Enclosure agm_enclosure(const Enclosure& b0, Precision prec);

} // namespace algind
