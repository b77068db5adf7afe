#include "algind/series.hpp"

#include <mutex>
#include <vector>

namespace algind {

namespace {

constexpr long kGuardBits = 64;
constexpr std::uint64_t kIterationCap = 400000;

Rational tail_target(long bits) { return Rational::pow2(-(bits + 2)); }

[[noreturn]] void convergence_failure() {
    throw PrecisionError("series did not converge within its iteration budget");
}

std::mutex cache_mutex;
std::vector<Int>& fib_store() {
    static std::vector<Int> v{Int(0), Int(1)};
    return v;
}
std::vector<Int>& lucas_store() {
    static std::vector<Int> v{Int(2), Int(1)};
    return v;
}
void extend_to(std::vector<Int>& v, std::size_t n) {
    while (v.size() <= n) v.push_back(v[v.size() - 1] + v[v.size() - 2]);
}

} // namespace

std::pair<Int, Int> fib_lucas(std::uint64_t n) {
    if (n > 2000000) throw ValidationError("index too large for the Fibonacci/Lucas cache");
    std::lock_guard<std::mutex> lock(cache_mutex);
    extend_to(fib_store(), n);
    extend_to(lucas_store(), n);
    return {fib_store()[n], lucas_store()[n]};
}

Rational bernoulli_number(unsigned n) {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, with B_0 = 1.
    std::vector<Rational> b;
    b.reserve(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        if (m == 0) {
            b.emplace_back(1);
            continue;
        }
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) acc += Rational(Int::binomial(m + 1, j)) * b[j];
        b.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return b[n];
}

Enclosure zeta_fib(unsigned two_s, Precision prec) {
    if (two_s < 2 || two_s % 2 != 0) throw ValidationError("exponent must be a positive even integer");
    const long bits = prec.bits;
    const Rational target = tail_target(bits);

    // F_n >= (8/5)^(n-2) gives the geometric tail
    // sum_{m>n} r^(m-2) = r^(n-1)/(1-r) with r = (8/5)^(-two_s).
    const Rational r = Rational(5, 8).pow(two_s);
    const Rational geom = (Rational(1) - r).inverse();

    Rational sum(0);
    Rational rpow(1); // r^(n-1)
    Rational tail;
    bool done = false;
    for (std::uint64_t n = 1; n <= kIterationCap; ++n) {
        auto [fib, lucas] = fib_lucas(n);
        (void)lucas;
        sum += Rational(Int(1), fib.pow(two_s));
        tail = rpow * geom;
        if (tail <= target) {
            done = true;
            break;
        }
        rpow *= r;
    }
    if (!done) convergence_failure();
    auto [mid, err] = dyadic_round_nearest(sum, bits + 16);
    return Enclosure(mid, dyadic_round_up(tail + err, bits + 16));
}

Enclosure q_series(QSeriesFamily family, unsigned order, const Rational& q, Precision prec) {
    if (order % 2 == 0 || order == 0) throw ValidationError("order must be an odd positive integer");
    Rational aq = q.abs();
    if (aq.is_zero() || aq >= Rational(1)) throw DomainError("q must satisfy 0 < |q| < 1");

    const long bits = prec.bits;
    const long w = bits + kGuardBits;
    const Rational target = tail_target(bits);
    const Rational one(1);

    // Term-ratio base: q^2 for the A/B families, |q| for C.
    const Rational ratio_base = family == QSeriesFamily::C ? aq : q * q;
    const Rational rho = (one + ratio_base) / Rational(2);

    Enclosure acc;
    Rational qp = q;      // q^n
    Rational q2p = q * q; // q^(2n)
    Rational tail;
    bool done = false;
    for (std::uint64_t n = 1; n <= kIterationCap; ++n) {
        Rational npow = Rational(static_cast<long>(n)).pow(order);
        Rational denom = one - q2p;
        Rational term;
        switch (family) {
            case QSeriesFamily::A: term = npow * q2p / denom; break;
            case QSeriesFamily::B: term = npow * q2p / denom; if (n % 2 == 0) term = -term; break;
            case QSeriesFamily::C: term = npow * qp / denom; break;
        }
        acc = enc_add(acc, Enclosure(term), w);

        Rational rn = ratio_base * (Rational(static_cast<long>(n) + 1) / Rational(static_cast<long>(n))).pow(order);
        if (rn <= rho) {
            tail = term.abs() * rn / (one - rn);
            if (tail <= target) {
                done = true;
                break;
            }
        }
        qp *= q;
        q2p *= q * q;
    }
    if (!done) convergence_failure();
    return enc_round(Enclosure(acc.mid(), acc.rad() + tail), bits + 16);
}

namespace {

// The constant terms -24 zeta(-1)/2, 240 zeta(-3)/2, -504 zeta(-5)/2 all
// equal 1; checked once against zeta(-n) = -B_(n+1)/(n+1).
void verify_eisenstein_constants() {
    static const bool checked = [] {
        const std::pair<unsigned, long> table[] = {{1, -24}, {3, 240}, {5, -504}};
        for (const auto& [n, weight] : table) {
            Rational zeta_neg = -bernoulli_number(n + 1) / Rational(static_cast<long>(n) + 1);
            if (Rational(weight) * zeta_neg / Rational(2) != Rational(1))
                throw InternalError("Eisenstein constant table disagrees with the Bernoulli recurrence");
        }
        return true;
    }();
    (void)checked;
}

} // namespace

Enclosure ramanujan(RamanujanFn which, const Rational& q, Precision prec) {
    if (q.abs() >= Rational(1)) throw DomainError("argument must lie in (-1, 1)");
    verify_eisenstein_constants();
    if (q.is_zero()) return Enclosure(Rational(1));

    unsigned power = which == RamanujanFn::P ? 1 : which == RamanujanFn::Q ? 3 : 5;
    Rational weight = which == RamanujanFn::P ? Rational(-24) : which == RamanujanFn::Q ? Rational(240) : Rational(-504);

    const long bits = prec.bits;
    const long w = bits + kGuardBits;
    const Rational target = tail_target(bits);
    const Rational one(1);
    const Rational aq = q.abs();
    const Rational rho = (one + aq) / Rational(2);

    Enclosure sum;
    Rational qp = q;   // q^n
    Rational aqp = aq; // |q|^n
    Rational tail;
    bool done = false;
    for (std::uint64_t n = 1; n <= kIterationCap; ++n) {
        Rational npow = Rational(static_cast<long>(n)).pow(power);
        sum = enc_add(sum, Enclosure(npow * qp / (one - qp)), w);

        // Majorant u_n = n^k |q|^n / (1 - |q|^n) dominates |t_n| and has
        // term ratio at most |q| ((n+1)/n)^k.
        Rational un = npow * aqp / (one - aqp);
        Rational rn = aq * (Rational(static_cast<long>(n) + 1) / Rational(static_cast<long>(n))).pow(power);
        if (rn <= rho) {
            tail = weight.abs() * un * rn / (one - rn);
            if (tail <= target) {
                done = true;
                break;
            }
        }
        qp *= q;
        aqp *= aq;
    }
    if (!done) convergence_failure();
    Enclosure value = enc_add(Enclosure(one), enc_scale(weight, sum, w), w);
    return enc_round(Enclosure(value.mid(), value.rad() + tail), bits + 16);
}

Enclosure theta(const Rational& q, Precision prec) {
    if (q.sign() < 0 || q >= Rational(1)) throw DomainError("argument must lie in [0, 1)");
    if (q.is_zero()) return Enclosure(Rational(1));

    const long bits = prec.bits;
    const long w = bits + kGuardBits;
    const Rational target = tail_target(bits);
    const Rational one(1);
    const Rational q2 = q * q;
    const Rational inv1mq = (one - q).inverse();

    Enclosure acc(one);
    Rational qsq = q;  // q^(v^2)
    Rational qodd = q * q2; // q^(2v+1)
    bool done = false;
    Rational tail;
    for (std::uint64_t v = 1; v <= kIterationCap; ++v) {
        acc = enc_add(acc, Enclosure(qsq + qsq), w);
        // v^2 grows by 2v+1 per step, so q^((v+1)^2) = qsq * qodd.
        tail = Rational(2) * qsq * qodd * inv1mq;
        if (tail <= target) {
            done = true;
            break;
        }
        qsq *= qodd;
        qodd *= q2;
    }
    if (!done) convergence_failure();
    return enc_round(Enclosure(acc.mid(), acc.rad() + tail), bits + 16);
}

namespace {

// Bound on sum_{m>N} w^m/m! once N + 2 > w: first omitted term times the
// geometric series in w/(N+2).
struct ExpTailTracker {
    Rational w_abs;
    Rational next_term; // w^(N+1)/(N+1)!
    std::uint64_t n = 0;

    explicit ExpTailTracker(Rational w) : w_abs(std::move(w)), next_term(w_abs) {}

    void advance() { // move from index n to n+1
        ++n;
        next_term = next_term * w_abs / Rational(static_cast<long>(n) + 1);
    }

    bool bound(Rational& out) const {
        Rational ratio = w_abs / Rational(static_cast<long>(n) + 2);
        if (ratio >= Rational(1)) return false;
        out = next_term / (Rational(1) - ratio);
        return true;
    }
};

} // namespace

Enclosure exp_residue(unsigned q_mod, unsigned r, const Rational& z, Precision prec) {
    if (q_mod < 1) throw ValidationError("modulus must be at least 1");
    if (r >= q_mod) throw ValidationError("residue must satisfy 0 <= r < modulus");

    const long bits = prec.bits;
    const long w = bits + kGuardBits;
    const Rational target = tail_target(bits);

    Enclosure acc;
    Rational term(1); // z^n/n!
    ExpTailTracker tracker(z.abs());
    bool done = false;
    for (std::uint64_t n = 0; n <= kIterationCap; ++n) {
        if (n % q_mod == r) acc = enc_add(acc, Enclosure(term), w);
        Rational tail;
        if (tracker.bound(tail) && tail <= target) {
            done = true;
            acc = Enclosure(acc.mid(), acc.rad() + tail);
            break;
        }
        term = term * z / Rational(static_cast<long>(n) + 1);
        tracker.advance();
    }
    if (!done) convergence_failure();
    return enc_round(acc, bits + 16);
}

Enclosure exp_fib_series(ExpFibKind kind, const ExpFibParams& params, const Rational& z, Precision prec) {
    const bool power_kind = kind == ExpFibKind::FibPower || kind == ExpFibKind::LucasPower;
    if (power_kind && params.s < 1) throw ValidationError("exponent s must be at least 1");
    if (!power_kind && params.a < 1) throw ValidationError("stride a must be at least 1");

    const long bits = prec.bits;
    const long w = bits + kGuardBits;
    const Rational target = tail_target(bits);

    // Term majorants from F_n <= 2^n and L_n <= 2^(n+1).
    unsigned growth = power_kind ? params.s : params.a;
    Rational prefactor(1);
    switch (kind) {
        case ExpFibKind::FibPower: break;
        case ExpFibKind::LucasPower: prefactor = Rational(Int::pow2(params.s)); break;
        case ExpFibKind::FibArith: prefactor = Rational(Int::pow2(params.b)); break;
        case ExpFibKind::LucasArith: prefactor = Rational(Int::pow2(params.b + 1)); break;
    }

    Enclosure acc;
    Rational zpow(1);
    Rational fact(1);
    ExpTailTracker tracker(Rational(Int::pow2(growth)) * z.abs());
    bool done = false;
    for (std::uint64_t n = 0; n <= kIterationCap; ++n) {
        std::uint64_t index = power_kind ? n : static_cast<std::uint64_t>(params.a) * n + params.b;
        auto [fib, lucas] = fib_lucas(index);
        Int coeff;
        switch (kind) {
            case ExpFibKind::FibPower: coeff = fib.pow(params.s); break;
            case ExpFibKind::LucasPower: coeff = lucas.pow(params.s); break;
            case ExpFibKind::FibArith: coeff = fib; break;
            case ExpFibKind::LucasArith: coeff = lucas; break;
        }
        acc = enc_add(acc, Enclosure(Rational(coeff) * zpow / fact), w);

        Rational tail;
        if (tracker.bound(tail)) {
            tail *= prefactor;
            if (tail <= target) {
                done = true;
                acc = Enclosure(acc.mid(), acc.rad() + tail);
                break;
            }
        }
        zpow *= z;
        fact *= Rational(static_cast<long>(n) + 1);
        tracker.advance();
    }
    if (!done) convergence_failure();
    return enc_round(acc, bits + 16);
}

namespace {

// Alternating arctangent series for 1/x with the first omitted term as the
// radius.
Enclosure atan_inv(long x, long bits) {
    const Rational target = Rational::pow2(-(bits + 4));
    const Rational inv_x2 = Rational(1, x * x);
    Rational term(1, x);
    Rational sum(0);
    for (std::uint64_t i = 0; i <= kIterationCap; ++i) {
        Rational contrib = term / Rational(static_cast<long>(2 * i) + 1);
        sum = (i % 2 == 0) ? sum + contrib : sum - contrib;
        term *= inv_x2;
        Rational next = term / Rational(static_cast<long>(2 * i) + 3);
        if (next <= target) return Enclosure(sum, next);
    }
    convergence_failure();
}

Enclosure pi_ball(long bits) {
    long w = bits + 16;
    Enclosure a5 = atan_inv(5, w);
    Enclosure a239 = atan_inv(239, w);
    return enc_sub(enc_scale(Rational(16), a5, w), enc_scale(Rational(4), a239, w), w);
}

// atanh-series logarithm of a rational in [2/3, 4/3].
Enclosure ln_reduced(const Rational& x, long bits) {
    const Rational one(1);
    if (x == one) return Enclosure(Rational(0));
    const Rational target = Rational::pow2(-(bits + 4));
    Rational u = (x - one) / (x + one);
    Rational u2 = u * u;
    Rational upow = u;
    Rational sum(0);
    Rational inv1mu2 = (one - u2).inverse();
    for (std::uint64_t i = 0; i <= kIterationCap; ++i) {
        sum += upow / Rational(static_cast<long>(2 * i) + 1);
        upow *= u2;
        Rational tail = upow.abs() / Rational(static_cast<long>(2 * i) + 3) * inv1mu2;
        if (tail <= target) return Enclosure(sum + sum, tail + tail);
    }
    convergence_failure();
}

// The atanh series also converges directly at 2 (u = 1/3).
Enclosure ln2_ball(long bits) { return ln_reduced(Rational(2), bits); }

Enclosure sqrt_rational(const Rational& x, long bits) {
    if (x.sign() < 0) throw DomainError("square root of a negative value");
    if (x.is_zero()) return Enclosure(Rational(0));
    Int p = x.num(), q = x.den();
    if (p.is_perfect_square() && q.is_perfect_square())
        return Enclosure(Rational(p.sqrt_floor(), q.sqrt_floor()));
    long e = static_cast<long>(p.bit_length()) - static_cast<long>(q.bit_length());
    long k = bits + 8 - e / 2;
    if (k < 0) k = 0;
    // floor(x * 4^k), then an integer square root brackets sqrt(x)
    // between s/2^k and (s+1)/2^k.
    Int scaled = Int::fdiv_qr(p.shifted_left(static_cast<unsigned long>(2 * k)), q).first;
    Int s = scaled.sqrt_floor();
    Rational denom(Int(1), Int::pow2(static_cast<unsigned long>(k)));
    return Enclosure::from_endpoints(Rational(s) * denom, Rational(s + Int(1)) * denom);
}

Enclosure exp_rational(const Rational& x, long bits) {
    if (x.is_zero()) return Enclosure(Rational(1));
    // Halve the argument into [-1/2, 1/2], then square back.
    long j = 0;
    Rational ax = x.abs();
    while (ax > Rational(1, 2)) {
        ax = ax * Rational(1, 2);
        ++j;
    }
    long w = bits + 2 * j + 24;
    Rational xr = x * Rational::pow2(-j);

    Enclosure acc;
    Rational term(1);
    ExpTailTracker tracker(xr.abs());
    const Rational target = Rational::pow2(-(w + 2));
    bool done = false;
    for (std::uint64_t n = 0; n <= kIterationCap; ++n) {
        acc = enc_add(acc, Enclosure(term), w + 16);
        Rational tail;
        if (tracker.bound(tail) && tail <= target) {
            done = true;
            acc = Enclosure(acc.mid(), acc.rad() + tail);
            break;
        }
        term = term * xr / Rational(static_cast<long>(n) + 1);
        tracker.advance();
    }
    if (!done) convergence_failure();
    for (long i = 0; i < j; ++i) acc = enc_mul(acc, acc, w + 16);
    return acc;
}

Enclosure ln_rational(const Rational& x, long bits) {
    if (x.sign() <= 0) throw DomainError("logarithm of a non-positive value");
    const Rational lo(2, 3), hi(4, 3), half(1, 2), two(2);
    Rational m = x;
    long e2 = 0;
    while (m >= hi) {
        m *= half;
        ++e2;
    }
    while (m < lo) {
        m *= two;
        --e2;
    }
    Enclosure base = ln_reduced(m, bits);
    if (e2 == 0) return base;
    Enclosure l2 = ln2_ball(bits + 16);
    return enc_add(base, enc_scale(Rational(e2), l2, bits + 16), bits + 16);
}

} // namespace

Enclosure pi_enclosure(Precision prec) { return enc_round(pi_ball(prec.bits), prec.bits + 16); }

Enclosure sqrt_enclosure(const Rational& x, Precision prec) {
    return enc_round(sqrt_rational(x, prec.bits), prec.bits + 16);
}

Enclosure ln_enclosure(const Rational& x, Precision prec) {
    return enc_round(ln_rational(x, prec.bits), prec.bits + 16);
}

Enclosure exp_enclosure(const Rational& x, Precision prec) {
    return enc_round(exp_rational(x, prec.bits), prec.bits + 16);
}

Enclosure sqrt_enc(const Enclosure& x, Precision prec) {
    if (x.is_exact()) return sqrt_rational(x.mid(), prec.bits);
    if (x.lower().sign() < 0) throw DomainError("square root of an interval reaching below zero");
    Rational lo = sqrt_rational(x.lower(), prec.bits).lower();
    Rational hi = sqrt_rational(x.upper(), prec.bits).upper();
    return Enclosure::from_endpoints(lo, hi);
}

Enclosure ln_enc(const Enclosure& x, Precision prec) {
    if (x.lower().sign() <= 0) throw DomainError("logarithm of an interval reaching below zero");
    if (x.is_exact()) return ln_rational(x.mid(), prec.bits);
    Rational lo = ln_rational(x.lower(), prec.bits).lower();
    Rational hi = ln_rational(x.upper(), prec.bits).upper();
    return Enclosure::from_endpoints(lo, hi);
}

Enclosure exp_enc(const Enclosure& x, Precision prec) {
    if (x.is_exact()) return exp_rational(x.mid(), prec.bits);
    Rational lo = exp_rational(x.lower(), prec.bits).lower();
    Rational hi = exp_rational(x.upper(), prec.bits).upper();
    return Enclosure::from_endpoints(lo, hi);
}

Enclosure agm_enclosure(const Enclosure& b0, Precision prec) {
    if (b0.lower().sign() <= 0) throw DomainError("AGM needs a positive second argument");
    if (b0.upper() > Rational(1)) throw DomainError("AGM bracket expects b <= 1");
    const long w = prec.bits + 16;

    Enclosure a(Rational(1));
    Enclosure b = b0;
    Rational best_lo = b.lower();
    Rational best_hi = a.upper();
    Rational prev_gap = best_hi - best_lo;
    for (int iter = 0; iter < 200; ++iter) {
        Enclosure an = enc_scale(Rational(1, 2), enc_add(a, b, w), w);
        Enclosure bn = sqrt_enc(enc_mul(a, b, w), Precision(w));
        a = an;
        b = bn;
        Rational lo = std::min(a.lower(), b.lower());
        Rational hi = std::max(a.upper(), b.upper());
        if (lo > best_lo) best_lo = lo;
        if (hi < best_hi) best_hi = hi;
        Rational gap = best_hi - best_lo;
        if (gap <= Rational::pow2(-(prec.bits + 8)) || gap >= prev_gap) break;
        prev_gap = gap;
    }
    return Enclosure::from_endpoints(best_lo, best_hi);
}

Enclosure elliptic_K(const Rational& k, Precision prec) {
    if (k.sign() < 0 || k > Rational(1)) throw DomainError("modulus must lie in [0, 1)");
    if (k == Rational(1)) throw DomainError("K diverges at modulus 1");
    const long w = prec.bits + 32;
    Enclosure pi = pi_ball(w);
    if (k.is_zero()) return enc_round(enc_scale(Rational(1, 2), pi, w), prec.bits + 16);
    Enclosure kp = sqrt_rational(Rational(1) - k * k, w);
    Enclosure agm = agm_enclosure(kp, Precision(w));
    return enc_round(enc_div(pi, enc_scale(Rational(2), agm, w), w), prec.bits + 16);
}

Enclosure elliptic_E(const Rational& k, Precision prec) {
    if (k.sign() < 0 || k > Rational(1)) throw DomainError("modulus must lie in [0, 1]");
    const long w = prec.bits + 32;
    if (k == Rational(1)) return Enclosure(Rational(1));
    Enclosure pihalf = enc_scale(Rational(1, 2), pi_ball(w), w);
    if (k.is_zero()) return enc_round(pihalf, prec.bits + 16);

    // Run the AGM on (1, k') while accumulating sum 2^(n-1) c_n^2 with
    // c_0 = k and c_(n+1) = (a_n - b_n)/2; then E = K (1 - sum).
    Enclosure a(Rational(1));
    Enclosure b = sqrt_rational(Rational(1) - k * k, w);
    Rational best_blo = b.lower();
    Enclosure csum = enc_scale(Rational(1, 2), Enclosure(k * k), w);
    Rational two_pow(1); // 2^(n-1)
    const Rational target = tail_target(prec.bits);
    Rational tail;
    bool done = false;
    for (int n = 1; n <= 300; ++n) {
        Enclosure c = enc_scale(Rational(1, 2), enc_sub(a, b, w), w);
        csum = enc_add(csum, enc_scale(two_pow, enc_mul(c, c, w), w), w);

        // c_(m+1) = c_m^2 / (4 a_(m+1)) <= c_m * rho with rho below; the tail
        // then collapses to a geometric series in 2 rho^2.
        Rational cup = c.abs_upper();
        Rational rho = cup / (Rational(4) * best_blo);
        if (rho < Rational(1, 2)) {
            Rational two_rho2 = Rational(2) * rho * rho;
            tail = two_pow * cup * cup * two_rho2 / (Rational(1) - two_rho2);
            if (tail <= target) {
                done = true;
                break;
            }
        }

        Enclosure an = enc_scale(Rational(1, 2), enc_add(a, b, w), w);
        Enclosure bn = sqrt_enc(enc_mul(a, b, w), Precision(w));
        a = an;
        b = bn;
        if (b.lower() > best_blo) best_blo = b.lower();
        two_pow *= Rational(2);
    }
    if (!done) convergence_failure();

    Enclosure kball = elliptic_K(k, Precision(w));
    Enclosure factor = enc_sub(Enclosure(Rational(1)), Enclosure(csum.mid(), csum.rad() + tail), w);
    return enc_round(enc_mul(kball, factor, w), prec.bits + 16);
}

Enclosure elliptic_K_enc(const Enclosure& k, Precision prec) {
    if (k.is_exact()) return elliptic_K(k.mid(), prec);
    Rational lo = elliptic_K(k.lower(), prec).lower();
    Rational hi = elliptic_K(k.upper(), prec).upper();
    return Enclosure::from_endpoints(lo, hi);
}

Enclosure elliptic_E_enc(const Enclosure& k, Precision prec) {
    if (k.is_exact()) return elliptic_E(k.mid(), prec);
    Rational lo = elliptic_E(k.upper(), prec).lower();
    Rational hi = elliptic_E(k.lower(), prec).upper();
    return Enclosure::from_endpoints(lo, hi);
}

namespace {

// K(sqrt(1-k^2))/K(k) = AGM(1, k')/AGM(1, k); strictly decreasing in k.
Enclosure modulus_ratio(const Rational& k, long w) {
    Enclosure kp = sqrt_rational(Rational(1) - k * k, w);
    Enclosure num = agm_enclosure(kp, Precision(w));
    Enclosure den = agm_enclosure(Enclosure(k), Precision(w));
    return enc_div(num, den, w);
}

Enclosure modulus_target(long w) {
    Enclosure s5 = sqrt_rational(Rational(5), w);
    Enclosure golden_inv = enc_scale(Rational(1, 2), enc_sub(s5, Enclosure(Rational(1)), w), w);
    Enclosure lng = ln_enc(golden_inv, Precision(w));
    return enc_div(enc_scale(Rational(-2), lng, w), pi_ball(w), w);
}

} // namespace

Enclosure solve_modulus(Precision prec) {
    const long bits = prec.bits;
    const long ceiling = 64 * bits + 8192;
    long w = bits + 40;

    Rational lo(1, 2);
    Rational hi;
    const Rational width_target = Rational::pow2(-(bits + 2));
    Enclosure target_c = modulus_target(w);

    // Comparison of ratio(k) against the target constant; +1/-1 when
    // certified, 0 when the enclosures overlap.
    auto compare_at = [&](const Rational& k) -> int {
        Enclosure d = enc_sub(modulus_ratio(k, w), target_c, w);
        if (d.lower().sign() > 0) return 1;
        if (d.upper().sign() < 0) return -1;
        return 0;
    };
    auto escalate = [&]() {
        w *= 2;
        if (w > ceiling) throw PrecisionError("precision ceiling reached while bracketing the modulus");
        target_c = modulus_target(w);
    };

    while (compare_at(lo) != 1) escalate();
    for (int i = 2;; ++i) {
        if (i > 64) throw PrecisionError("failed to bracket the modulus from above");
        Rational candidate = Rational(1) - Rational::pow2(-i);
        int c = compare_at(candidate);
        if (c == 0) {
            escalate();
            --i;
            continue;
        }
        if (c == -1) {
            hi = candidate;
            break;
        }
        lo = candidate; // ratio still above target, move the bracket up
    }

    while (hi - lo > width_target) {
        Rational mid = (lo + hi) * Rational(1, 2);
        int c = compare_at(mid);
        if (c == 0) {
            escalate();
            continue;
        }
        (c == 1 ? lo : hi) = mid;
    }
    return Enclosure::from_endpoints(lo, hi);
}

} // namespace algind
