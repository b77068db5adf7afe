#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algind/parser.hpp"
#include "algind/zerotest.hpp"
#include "test_support.hpp"

using namespace algind;
using testsupport::Gen;

namespace {

const std::vector<std::string> kVars = {"X1", "X2"};

RationalFunction rf(const std::string& text, const std::vector<std::string>& vars = kVars) {
    ParsedExpr e = parse_expression(text, vars);
    if (std::holds_alternative<Polynomial>(e))
        return RationalFunction::from_polynomial(std::get<Polynomial>(e));
    return std::get<RationalFunction>(e);
}

SymbolicMatrix matrix2(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    SymbolicMatrix m;
    m.rows = m.cols = 2;
    m.vars = kVars;
    m.entries = {rf(a), rf(b), rf(c), rf(d)};
    return m;
}

Rational eval_det_at(const SymbolicMatrix& m, const std::map<std::string, Rational>& witness) {
    std::vector<Rational> pt;
    for (const auto& v : m.vars) pt.push_back(witness.at(v));
    std::vector<Rational> vals;
    for (const auto& e : m.entries) vals.push_back(e.eval_exact(pt));
    return rational_determinant(std::move(vals), m.rows);
}

} // namespace

TEST_CASE("counter rng is splittable and deterministic") {
    CounterRng a{42}, b{42}, c{43};
    CHECK(a.at(7) == b.at(7));
    CHECK(a.at(7) != c.at(7));
    CHECK(a.at(0) != a.at(1));
}

TEST_CASE("rational determinant") {
    CHECK(rational_determinant({Rational(3)}, 1) == Rational(3));
    CHECK(rational_determinant({Rational(1), Rational(2), Rational(3), Rational(4)}, 2) == Rational(-2));
    // Row swap path.
    CHECK(rational_determinant({Rational(0), Rational(1), Rational(1), Rational(0)}, 2) == Rational(-1));
    CHECK(rational_determinant({Rational(0), Rational(0), Rational(1), Rational(2)}, 2) == Rational(0));
}

TEST_CASE("poly_is_zero is definitive") {
    Polynomial x1 = Polynomial::variable(kVars, "X1");
    Polynomial x2 = Polynomial::variable(kVars, "X2");
    CHECK(poly_is_zero((x1 + x2) * (x1 - x2) - x1 * x1 + x2 * x2));
    CHECK(!poly_is_zero(x1 - x2));

    Gen gen(1009);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = gen.polynomial(kVars, 2, 3);
        Polynomial b = gen.polynomial(kVars, 2, 3);
        Polynomial c = gen.polynomial(kVars, 2, 3);
        CHECK(poly_is_zero((a * b) * c - a * (b * c)));
    }
}

TEST_CASE("nonzero witness for a generic matrix") {
    SymbolicMatrix m = matrix2("1", "1", "X2", "X1");
    ZeroTestResult r = det_zero_status(m, 1, 64);
    REQUIRE(r.status == ZeroTestResult::Status::NonzeroWitness);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_value.has_value());
    CHECK(!r.witness_value->is_zero());
    CHECK(!r.symbolic_expansion_used);
    // The witness re-evaluates to the stored value; det = X1 - X2.
    CHECK(eval_det_at(m, *r.witness) == *r.witness_value);
    CHECK(r.witness->at("X1") - r.witness->at("X2") == *r.witness_value);
}

TEST_CASE("identically zero needs symbolic expansion") {
    SymbolicMatrix m = matrix2("0", "1", "0", "1 + 240*X2");
    ZeroTestResult r = det_zero_status(m, 5, 16);
    CHECK(r.status == ZeroTestResult::Status::IdenticallyZero);
    CHECK(r.symbolic_expansion_used);
    CHECK(!r.witness.has_value());
    CHECK(poly_is_zero(determinant(m).num()));
}

TEST_CASE("identity matrix yields witness value one") {
    SymbolicMatrix m = matrix2("1", "0", "0", "1");
    ZeroTestResult r = det_zero_status(m, 9, 8);
    REQUIRE(r.status == ZeroTestResult::Status::NonzeroWitness);
    CHECK(*r.witness_value == Rational(1));
    CHECK(r.samples_tried == 1);
}

TEST_CASE("rational entries sample around denominators") {
    SymbolicMatrix m;
    m.rows = m.cols = 1;
    m.vars = {"X1"};
    m.entries = {rf("1/X1", {"X1"})};
    ZeroTestResult r = det_zero_status(m, 3, 32);
    REQUIRE(r.status == ZeroTestResult::Status::NonzeroWitness);
    CHECK(!r.witness->at("X1").is_zero());
}

TEST_CASE("fixed seed and budget reproduce results exactly") {
    SymbolicMatrix m = matrix2("X1 + X2", "X1*X2", "1", "X1 - X2");
    ZeroTestResult r1 = det_zero_status(m, 77, 64);
    ZeroTestResult r2 = det_zero_status(m, 77, 64);
    REQUIRE(r1.status == r2.status);
    CHECK(r1.samples_tried == r2.samples_tried);
    if (r1.status == ZeroTestResult::Status::NonzeroWitness) {
        CHECK(*r1.witness == *r2.witness);
        CHECK(*r1.witness_value == *r2.witness_value);
    }
}

TEST_CASE("budget exhaustion without fallback is an error") {
    SymbolicMatrix m = matrix2("1", "1", "X2", "X1");
    CHECK_THROWS_AS(det_zero_status(m, 1, 0, false), BudgetError);
}

TEST_CASE("zero budget with fallback still decides") {
    SymbolicMatrix nonzero = matrix2("1", "1", "X2", "X1");
    ZeroTestResult r = det_zero_status(nonzero, 1, 0, true);
    CHECK(r.status == ZeroTestResult::Status::NonzeroWitness);
    CHECK(r.symbolic_expansion_used);
    CHECK(eval_det_at(nonzero, *r.witness) == *r.witness_value);

    SymbolicMatrix zero = matrix2("X1", "X1", "X2", "X2");
    ZeroTestResult rz = det_zero_status(zero, 1, 0, true);
    CHECK(rz.status == ZeroTestResult::Status::IdenticallyZero);
}

TEST_CASE("soundness on random matrices") {
    Gen gen(1201);
    for (int i = 0; i < 30; ++i) {
        std::size_t n = static_cast<std::size_t>(gen.range(1, 3));
        SymbolicMatrix m;
        m.rows = m.cols = n;
        m.vars = kVars;
        bool make_singular = gen.range(0, 1) == 0 && n == 2;
        if (make_singular) {
            // Proportional rows force an identically zero determinant.
            Polynomial a = gen.polynomial(kVars, 2, 3);
            Polynomial b = gen.polynomial(kVars, 2, 3);
            m.entries = {RationalFunction::from_polynomial(a), RationalFunction::from_polynomial(b),
                         RationalFunction::from_polynomial(a.scaled(Rational(3))),
                         RationalFunction::from_polynomial(b.scaled(Rational(3)))};
        } else {
            for (std::size_t e = 0; e < n * n; ++e)
                m.entries.push_back(RationalFunction::from_polynomial(gen.polynomial(kVars, 2, 3)));
        }
        ZeroTestResult r = det_zero_status(m, 1000 + static_cast<std::uint64_t>(i), 48);
        if (r.status == ZeroTestResult::Status::NonzeroWitness) {
            CHECK(eval_det_at(m, *r.witness) == *r.witness_value);
            CHECK(!r.witness_value->is_zero());
        } else {
            CHECK(poly_is_zero(determinant(m).num()));
            if (make_singular) CHECK(r.symbolic_expansion_used);
        }
    }
}
