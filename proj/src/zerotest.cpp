#include "algind/zerotest.hpp"

namespace algind {

std::uint64_t CounterRng::at(std::uint64_t i) const {
    // splitmix64 finalizer over a seed-offset counter.
    std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool poly_is_zero(const Polynomial& p) { return p.is_zero(); }

Rational rational_determinant(std::vector<Rational> m, std::size_t n) {
    if (m.size() != n * n) throw StructuralError("matrix entry count does not match dimension");
    Rational det(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot * n + k].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t i = k; i < n; ++i) std::swap(m[pivot * n + i], m[k * n + i]);
            sign = -sign;
        }
        const Rational& p = m[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m[r * n + k].is_zero()) continue;
            Rational factor = m[r * n + k] / p;
            for (std::size_t c = k + 1; c < n; ++c) m[r * n + c] -= factor * m[k * n + c];
            m[r * n + k] = Rational(0);
        }
        det *= p;
    }
    return sign < 0 ? -det : det;
}

namespace {

constexpr long kSampleBox = 1 << 16;

struct Sampler {
    const SymbolicMatrix& mat;
    CounterRng rng;
    std::uint64_t counter = 0;

    std::vector<Rational> draw() {
        std::vector<Rational> pt;
        pt.reserve(mat.vars.size());
        for (std::size_t i = 0; i < mat.vars.size(); ++i) {
            std::uint64_t r = rng.at(counter++);
            long v = static_cast<long>(r % (2 * kSampleBox + 1)) - kSampleBox;
            pt.emplace_back(v);
        }
        return pt;
    }

    // Exact determinant at the point, or nullopt when a denominator vanishes.
    std::optional<Rational> det_at(const std::vector<Rational>& pt) const {
        std::vector<Rational> vals;
        vals.reserve(mat.entries.size());
        for (const auto& e : mat.entries) {
            Rational d = e.den().eval_exact(pt);
            if (d.is_zero()) return std::nullopt;
            vals.push_back(e.num().eval_exact(pt) / d);
        }
        return rational_determinant(std::move(vals), mat.rows);
    }
};

std::map<std::string, Rational> witness_map(const SymbolicMatrix& mat, const std::vector<Rational>& pt) {
    std::map<std::string, Rational> w;
    for (std::size_t i = 0; i < mat.vars.size(); ++i) w.emplace(mat.vars[i], pt[i]);
    return w;
}

} // namespace

ZeroTestResult det_zero_status(const SymbolicMatrix& mat, std::uint64_t seed, std::uint64_t budget,
                               bool allow_symbolic) {
    if (!mat.is_square()) throw ValidationError("zero test needs a square matrix");

    ZeroTestResult result;
    Sampler sampler{mat, CounterRng{seed}};
    const std::uint64_t redraw_cap = 10 * budget;
    std::uint64_t redraws = 0;

    while (result.samples_tried < budget) {
        std::vector<Rational> pt = sampler.draw();
        auto det = sampler.det_at(pt);
        if (!det) {
            if (++redraws >= redraw_cap) break;
            continue;
        }
        ++result.samples_tried;
        if (!det->is_zero()) {
            result.status = ZeroTestResult::Status::NonzeroWitness;
            result.witness = witness_map(mat, pt);
            result.witness_value = std::move(*det);
            return result;
        }
    }

    if (!allow_symbolic) throw BudgetError("undecided after sampling budget; raise the budget");

    result.symbolic_expansion_used = true;
    RationalFunction sym = determinant(mat, DetMethod::Auto);
    if (poly_is_zero(sym.num())) {
        result.status = ZeroTestResult::Status::IdenticallyZero;
        return result;
    }

    // The determinant is provably nonzero; keep the deterministic stream
    // running until a witness point avoids all denominators and the zero set.
    for (std::uint64_t guard = 0; guard < 1000 * (budget + 1) + 100000; ++guard) {
        std::vector<Rational> pt = sampler.draw();
        auto det = sampler.det_at(pt);
        if (!det) continue;
        ++result.samples_tried;
        if (!det->is_zero()) {
            result.status = ZeroTestResult::Status::NonzeroWitness;
            result.witness = witness_map(mat, pt);
            result.witness_value = std::move(*det);
            return result;
        }
    }
    throw InternalError("failed to locate a witness for a provably nonzero determinant");
}

} // namespace algind
