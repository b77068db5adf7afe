#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algind/enclosure.hpp"
#include "algind/polynomial.hpp"
#include "algind/ratfun.hpp"
#include "algind/rational.hpp"
#include "test_support.hpp"

using namespace algind;
using testsupport::Gen;

namespace {

const std::vector<std::string> kXY = {"X1", "X2"};
const std::vector<std::string> kXYZ = {"X1", "X2", "Y1"};

Polynomial var(const std::vector<std::string>& vars, const std::string& name) {
    return Polynomial::variable(vars, name);
}

// Distributive expansion done independently of operator*: collect all
// pairwise exponent sums, then fold.
Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
    std::map<Exponents, Rational> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ca * cb);
            else
                it->second += ca * cb;
        }
    Polynomial out(a.vars());
    for (const auto& [e, c] : acc)
        if (!c.is_zero()) out = out + Polynomial::monomial(a.vars(), e, c);
    return out;
}

// Term-by-term substitution, independent of eval_exact/poly_eval.
Rational substitution_oracle(const Polynomial& p, const std::vector<Rational>& point) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

} // namespace

TEST_CASE("rational canonical form and parsing") {
    Rational r(6, -4);
    CHECK(r.num().to_string() == "-3");
    CHECK(r.den().to_string() == "2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK(Rational::from_string("2.076730850") == Rational(Int("2076730850"), Int("1000000000")));
    CHECK(Rational::from_string(" 7 ") == Rational(7));
    CHECK_THROWS_AS(Rational::from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(Rational::from_string("abc"), ValidationError);
    CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
}

TEST_CASE("dyadic rounding is conservative") {
    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        Rational x = gen.rational(1000, 997);
        auto [d, err] = dyadic_round_nearest(x, 64);
        CHECK((x - d).abs() <= err);
        Rational up = dyadic_round_up(x.abs(), 64);
        CHECK(up >= x.abs());
    }
}

TEST_CASE("polynomial product of sum and difference") {
    Polynomial x1 = var(kXY, "X1"), x2 = var(kXY, "X2");
    Polynomial lhs = (x1 + x2) * (x1 - x2);
    Polynomial rhs = x1 * x1 - x2 * x2;
    CHECK(lhs == rhs);
}

TEST_CASE("polynomial additive identity") {
    Gen gen(23);
    Polynomial p = gen.polynomial(kXY, 3, 6);
    CHECK(p + Polynomial(kXY) == p);
}

TEST_CASE("polynomial multiplication matches distributive oracle") {
    Polynomial x1 = var(kXY, "X1"), x2 = var(kXY, "X2");
    Polynomial got = (x1 + x2) * (x1 * x2);
    CHECK(got == naive_mul(x1 + x2, x1 * x2));

    Gen gen(37);
    for (int i = 0; i < 50; ++i) {
        Polynomial a = gen.polynomial(kXYZ, 3, 5);
        Polynomial b = gen.polynomial(kXYZ, 3, 5);
        CHECK(a * b == naive_mul(a, b));
    }
}

TEST_CASE("polynomial arithmetic rejects mismatched variable lists") {
    Polynomial a = var(kXY, "X1");
    Polynomial b = var(kXYZ, "X1");
    CHECK_THROWS_AS(a + b, StructuralError);
    CHECK_THROWS_AS(a * b, StructuralError);
}

TEST_CASE("ring axioms on random triples") {
    Gen gen(101);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = gen.polynomial(kXY, 2, 4);
        Polynomial b = gen.polynomial(kXY, 2, 4);
        Polynomial c = gen.polynomial(kXY, 2, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("formal partial derivatives") {
    Polynomial x1 = var(kXYZ, "X1"), y1 = var(kXYZ, "Y1");
    Polynomial p = x1 * x1 * y1 + y1.scaled(Rational(3));
    CHECK(p.partial("X1") == x1.scaled(Rational(2)) * y1);
    Polynomial cube = var(kXYZ, "X1").pow(3);
    CHECK(cube.partial("X2").is_zero());
    CHECK_THROWS_AS(p.partial("W"), StructuralError);

    // Expand-then-differentiate oracle for d/dX1 (X1+X2)^3.
    Polynomial s = var(kXYZ, "X1") + var(kXYZ, "X2");
    CHECK(s.pow(3).partial("X1") == s.pow(2).scaled(Rational(3)));
}

TEST_CASE("derivative is linear") {
    Gen gen(211);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = gen.polynomial(kXY, 3, 5);
        Polynomial q = gen.polynomial(kXY, 3, 5);
        Rational a = gen.rational(), b = gen.rational();
        Polynomial combo = p.scaled(a) + q.scaled(b);
        CHECK(combo.partial("X1") == p.partial("X1").scaled(a) + q.partial("X1").scaled(b));
    }
}

TEST_CASE("exact evaluation") {
    Polynomial p = var(kXY, "X1") + var(kXY, "X2") * var(kXY, "X2");
    PointAssignment pt;
    pt.bindings.emplace("X1", Enclosure(Rational(2)));
    pt.bindings.emplace("X2", Enclosure(Rational(3)));
    Enclosure v = poly_eval(p, pt, 128);
    CHECK(v.is_exact());
    CHECK(v.mid() == Rational(11));

    PointAssignment missing;
    missing.bindings.emplace("X1", Enclosure(Rational(2)));
    CHECK_THROWS_AS(poly_eval(p, missing, 128), StructuralError);
}

TEST_CASE("interval product bound") {
    Polynomial p = var(kXY, "X1") * var(kXY, "X2");
    PointAssignment pt;
    pt.bindings.emplace("X1", Enclosure(Rational(1), Rational(1, 10)));
    pt.bindings.emplace("X2", Enclosure(Rational(1), Rational(1, 10)));
    Enclosure v = poly_eval(p, pt, 128);
    CHECK(v.lower() <= Rational(81, 100));
    CHECK(v.upper() >= Rational(121, 100));
}

TEST_CASE("evaluation matches term substitution oracle on random points") {
    Gen gen(301);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = gen.polynomial(kXYZ, 3, 6);
        std::vector<Rational> point;
        PointAssignment pt;
        for (const auto& v : kXYZ) {
            Rational r = gen.rational();
            point.push_back(r);
            pt.bindings.emplace(v, Enclosure(r));
        }
        Enclosure got = poly_eval(p, pt, 128);
        CHECK(got.is_exact());
        CHECK(got.mid() == substitution_oracle(p, point));
    }
}

TEST_CASE("enclosure soundness on random boxes") {
    Gen gen(401);
    for (int i = 0; i < 500; ++i) {
        Polynomial p = gen.polynomial(kXY, 3, 5);
        PointAssignment pt;
        std::vector<Rational> mids;
        for (const auto& v : kXY) {
            Rational mid = gen.rational();
            Rational rad = Rational(gen.range(0, 3), 7);
            mids.push_back(mid);
            pt.bindings.emplace(v, Enclosure(mid, rad));
        }
        Enclosure box = poly_eval(p, pt, 96);
        CHECK(box.contains(p.eval_exact(mids)));
    }
}

TEST_CASE("rational function unreduced representation") {
    Polynomial x1 = var(kXY, "X1");
    RationalFunction inv_x1(Polynomial::constant(kXY, Rational(1)), x1);
    RationalFunction prod = inv_x1 * RationalFunction::from_polynomial(x1);
    // X1/X1 is kept unreduced but equals one under cross-multiplication.
    CHECK(prod.num() == x1);
    CHECK(prod.den() == x1);
    CHECK(prod.equals(RationalFunction::constant(kXY, Rational(1))));
}

TEST_CASE("rational function self subtraction is zero") {
    Gen gen(431);
    for (int i = 0; i < 20; ++i) {
        RationalFunction a = gen.ratfun(kXY, 2, 3);
        CHECK((a - a).is_zero());
        CHECK((a - a).den() == Polynomial::constant(kXY, Rational(1)));
    }
}

TEST_CASE("rational function addition formula at random points") {
    Gen gen(443);
    RationalFunction a = gen.ratfun(kXY, 2, 3);
    RationalFunction b = gen.ratfun(kXY, 2, 3);
    RationalFunction sum = a + b;
    RationalFunction expected(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
    CHECK(sum.equals(expected));

    int checked = 0;
    for (int i = 0; checked < 50 && i < 5000; ++i) {
        std::vector<Rational> pt = {gen.rational(20, 3), gen.rational(20, 3)};
        try {
            Rational lhs = sum.eval_exact(pt);
            Rational rhs = a.eval_exact(pt) + b.eval_exact(pt);
            CHECK(lhs == rhs);
            ++checked;
        } catch (const ArithmeticError&) {
            continue; // denominator hit, redraw
        }
    }
    CHECK(checked == 50);
}

TEST_CASE("rational function division by zero") {
    Gen gen(457);
    RationalFunction a = gen.ratfun(kXY, 2, 3);
    RationalFunction zero = RationalFunction::constant(kXY, Rational(0));
    CHECK_THROWS_AS(a / zero, ArithmeticError);
}

TEST_CASE("denominator normalization") {
    // den gets integer content 1 and a positive leading coefficient.
    Polynomial x1 = var(kXY, "X1");
    RationalFunction r(Polynomial::constant(kXY, Rational(3)), x1.scaled(Rational(-4, 6)));
    CHECK(r.den() == x1);
    CHECK(r.num() == Polynomial::constant(kXY, Rational(-9, 2)));
}

TEST_CASE("quotient rule") {
    Polynomial x1 = var(kXY, "X1"), x2 = var(kXY, "X2");
    RationalFunction inv_x1(Polynomial::constant(kXY, Rational(1)), x1);
    RationalFunction d = inv_x1.partial("X1");
    RationalFunction expected(Polynomial::constant(kXY, Rational(-1)), x1 * x1);
    CHECK(d.equals(expected));

    RationalFunction poly_rf = RationalFunction::from_polynomial(x1);
    CHECK(poly_rf.partial("X2").is_zero());
}

TEST_CASE("ratfun partial against central finite differences") {
    const std::vector<std::string> vars = kXY;
    Polynomial x1 = var(vars, "X1"), x2 = var(vars, "X2");
    RationalFunction f = RationalFunction(x1, x2) + RationalFunction(x2, x1);
    RationalFunction df = f.partial("X1");
    std::vector<Rational> at = {Rational(2), Rational(3)};
    Rational exact = df.eval_exact(at);

    auto central = [&](const Rational& h) {
        std::vector<Rational> up = {at[0] + h, at[1]};
        std::vector<Rational> dn = {at[0] - h, at[1]};
        return (f.eval_exact(up) - f.eval_exact(dn)) / (h + h);
    };
    Rational err1 = (central(Rational(1, 10)) - exact).abs();
    Rational err2 = (central(Rational(1, 100)) - exact).abs();
    Rational err3 = (central(Rational(1, 1000)) - exact).abs();
    CHECK(!err1.is_zero());
    // Quadratic shrink: scaling h by 1/10 cuts the error by about 100.
    CHECK(err2 <= err1 * Rational(1, 50));
    CHECK(err3 <= err2 * Rational(1, 50));
}

TEST_CASE("cross-multiplication equality is an equivalence consistent with evaluation") {
    Gen gen(601);
    for (int i = 0; i < 40; ++i) {
        RationalFunction a = gen.ratfun(kXY, 2, 3);
        Polynomial scale = gen.nonzero_polynomial(kXY, 1, 2);
        RationalFunction b(a.num() * scale, a.den() * scale);
        CHECK(a.equals(a));
        CHECK(b.equals(a));
        CHECK(a.equals(b));

        RationalFunction c = gen.ratfun(kXY, 2, 3);
        if (a.equals(c)) continue;
        // Disagreement must show up at some rational point.
        bool found_difference = false;
        for (int j = 0; j < 200 && !found_difference; ++j) {
            std::vector<Rational> pt = {gen.rational(50, 3), gen.rational(50, 3)};
            try {
                found_difference = a.eval_exact(pt) != c.eval_exact(pt);
            } catch (const ArithmeticError&) {
            }
        }
        CHECK(found_difference);
    }
}

TEST_CASE("enclosure basics") {
    Enclosure e(Rational(2), Rational(1, 4));
    CHECK(e.lower() == Rational(7, 4));
    CHECK(e.upper() == Rational(9, 4));
    CHECK(e.excludes_zero());
    CHECK(Enclosure(Rational(0), Rational(1)).contains_zero());
    CHECK_THROWS_AS(Enclosure(Rational(0), Rational(-1)), StructuralError);

    Enclosure prod = enc_mul(Enclosure(Rational(1), Rational(1, 10)), Enclosure(Rational(1), Rational(1, 10)), 0);
    CHECK(prod.lower() <= Rational(81, 100));
    CHECK(prod.upper() >= Rational(121, 100));

    Enclosure q = enc_div(Enclosure(Rational(1)), Enclosure(Rational(3)), 64);
    CHECK(q.contains(Rational(1, 3)));
    CHECK(q.rad() <= Rational::pow2(-60));
    CHECK_THROWS_AS(enc_div(Enclosure(Rational(1)), Enclosure(Rational(0), Rational(1)), 64), ArithmeticError);
}

TEST_CASE("enclosure decimal strings") {
    Enclosure e(Rational::from_string("2.076730850567"), Rational(1, Int("100000000000000").to_long()));
    auto dec = e.decimal_string(9);
    REQUIRE(dec.has_value());
    CHECK(*dec == "2.076730850");
    CHECK(!Enclosure(Rational(0), Rational(5)).decimal_string(3).has_value());
}
