#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algind/job.hpp"
#include "algind/parser.hpp"
#include "test_support.hpp"

using namespace algind;
using testsupport::Gen;

namespace {

const std::vector<std::string> kVars = {"X1", "X2", "Y1"};

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars = kVars) {
    ParsedExpr e = parse_expression(text, vars);
    REQUIRE(std::holds_alternative<Polynomial>(e));
    return std::get<Polynomial>(e);
}

RationalFunction parse_rf(const std::string& text, const std::vector<std::string>& vars = kVars) {
    ParsedExpr e = parse_expression(text, vars);
    REQUIRE(std::holds_alternative<RationalFunction>(e));
    return std::get<RationalFunction>(e);
}

} // namespace

TEST_CASE("direct term reading") {
    Polynomial p = parse_poly("X1^2*Y1 - 3/2*X2");
    REQUIRE(p.term_count() == 2);
    CHECK(p.terms().at({2, 0, 1}) == Rational(1));
    CHECK(p.terms().at({0, 1, 0}) == Rational(-3, 2));
}

TEST_CASE("malformed input is positioned") {
    try {
        parse_expression("X1 + * X2", kVars);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
    try {
        parse_expression("X1 +\n  * X2", kVars);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
}

TEST_CASE("binomial cube expands like repeated multiplication") {
    Polynomial got = parse_poly("(X1+X2)^3");
    Polynomial s = parse_poly("X1+X2");
    CHECK(got == s * s * s);
    CHECK(got.term_count() == 4);
    CHECK(got.terms().at({2, 1, 0}) == Rational(3));
}

TEST_CASE("caret binds tighter than unary minus") {
    Polynomial p = parse_poly("-X1^2");
    CHECK(p.terms().at({2, 0, 0}) == Rational(-1));
}

TEST_CASE("juxtaposition is not multiplication") {
    CHECK_THROWS_AS(parse_expression("2 X1", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("2X1", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1 X2", kVars), ParseError);
}

TEST_CASE("undeclared variable is named") {
    try {
        parse_expression("X1 + W2", kVars);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("W2") != std::string::npos);
    }
}

TEST_CASE("division semantics") {
    Polynomial half = parse_poly("X1/2");
    CHECK(half.terms().at({1, 0, 0}) == Rational(1, 2));

    RationalFunction rf = parse_rf("X1/X2");
    CHECK(rf.num() == Polynomial::variable(kVars, "X1"));
    CHECK(rf.den() == Polynomial::variable(kVars, "X2"));

    RationalFunction sum = parse_rf("X1/X2 + X2/X1");
    CHECK(sum.equals(RationalFunction(parse_poly("X1^2 + X2^2"), parse_poly("X1*X2"))));

    CHECK_THROWS_AS(parse_expression("3/0", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1/(X2 - X2)", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1/0*X2", kVars), ParseError);
}

TEST_CASE("whitespace is insignificant and misc errors are positioned") {
    CHECK(parse_poly(" X1\t+\n X2 ") == parse_poly("X1+X2"));
    CHECK_THROWS_AS(parse_expression("", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("(X1", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1^", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1^2^3", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1^(2)", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("--X1", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1 @ X2", kVars), ParseError);
}

TEST_CASE("resource guards stay positioned errors") {
    CHECK_THROWS_AS(parse_expression(std::string(5000, '('), kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("X1^99999999", kVars), ParseError);
    CHECK_THROWS_AS(parse_expression("(X1+X2+Y1+3)^512*(X1+X2+Y1+5)^512*(X1+X2+Y1+7)^512", kVars), ParseError);
}

TEST_CASE("canonical formatting") {
    CHECK(format_canonical(Polynomial(kVars)) == "0");
    Polynomial p(std::vector<std::string>{"X1", "X2"});
    p = p + Polynomial::monomial({"X1", "X2"}, {1, 1}, Rational(1));
    p = p + Polynomial::monomial({"X1", "X2"}, {2, 0}, Rational(1));
    CHECK(format_canonical(p) == "X1^2 + X1*X2");
    CHECK(format_canonical(parse_poly("-X1 - 3/2")) == "-X1 - 3/2");
    CHECK(format_canonical(parse_rf("(X1+1)/X2")) == "(X1 + 1)/(X2)");
}

TEST_CASE("format-parse round trip on random polynomials") {
    Gen gen(911);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = gen.polynomial(kVars, 4, 7);
        ParsedExpr back = parse_expression(format_canonical(p), kVars);
        REQUIRE(std::holds_alternative<Polynomial>(back));
        CHECK(std::get<Polynomial>(back) == p);
    }
}

TEST_CASE("fuzzing produces only positioned errors") {
    Gen gen(977);
    static const char alphabet[] = "X12Y+-*/^() \t\n.,;abz#\\\"'\x80\xff\x01";
    int parsed = 0, failed = 0;
    for (int i = 0; i < 20000; ++i) {
        std::string input;
        std::size_t len = static_cast<std::size_t>(gen.range(0, 24));
        for (std::size_t k = 0; k < len; ++k)
            input.push_back(alphabet[gen.range(0, static_cast<long>(sizeof(alphabet) - 2))]);
        try {
            (void)parse_expression(input, kVars);
            ++parsed;
        } catch (const ParseError&) {
            ++failed;
        }
        // Any other exception escapes and fails the test.
    }
    CHECK(parsed + failed == 20000);
    CHECK(failed > 0);
}

namespace {

std::string minimal_map_job() {
    return R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": ["X1"]})";
}

std::string implicit_job(bool with_point) {
    std::string point = with_point ? R"(,"point": {"X1": {"mid": "2", "rad": "0"}, "Y1": {"mid": "2", "rad": "0"}})" : "";
    return R"({"mode": "implicit", "x_vars": ["X1"], "y_vars": ["Y1"], "equations": ["Y1 - X1"])" + point + "}";
}

} // namespace

TEST_CASE("job parsing happy path") {
    JobSpec job = parse_job(minimal_map_job());
    CHECK(job.mode == JobMode::PolynomialMap);
    CHECK(job.n() == 1);
    CHECK(job.equations.size() == 1);
    CHECK(job.precision_bits == 128);
    CHECK(!job.seed.has_value());

    JobSpec imp = parse_job(implicit_job(true));
    CHECK(imp.point->at("X1").mid() == Rational(2));
}

TEST_CASE("job validation errors name the problem") {
    CHECK_THROWS_WITH_AS(parse_job(implicit_job(false)), "point required in implicit mode", ValidationError);
    CHECK_THROWS_AS(parse_job("{"), ValidationError);
    CHECK_THROWS_AS(parse_job("[]"), ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": ["X1"], "bogus": 1})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "nope", "x_vars": ["X1"], "equations": ["X1"]})"), ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1", "X1"], "equations": ["X1", "X1"]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": []})"), ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": ["X1/X1"]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": ["X1"], "m": 1})"),
                    ValidationError);
    // Partial mode arity rules.
    CHECK_THROWS_AS(
        parse_job(
            R"({"mode": "partial", "x_vars": ["X1", "X2"], "y_vars": ["Y1", "Y2"], "m": 2, "equations": ["Y1 - X1", "Y2 - X2"]})"),
        ValidationError);
    // Point binding must cover every variable.
    CHECK_THROWS_AS(
        parse_job(
            R"({"mode": "implicit", "x_vars": ["X1"], "y_vars": ["Y1"], "equations": ["Y1 - X1"], "point": {"X1": {"mid": "2", "rad": "0"}}})"),
        ValidationError);
    // Unknown point variable.
    CHECK_THROWS_AS(
        parse_job(
            R"({"mode": "implicit", "x_vars": ["X1"], "y_vars": ["Y1"], "equations": ["Y1 - X1"], "point": {"X1": {"mid": "2", "rad": "0"}, "Y1": {"mid": "2", "rad": "0"}, "Z": {"mid": "0", "rad": "0"}}})"),
        ValidationError);
    CHECK_THROWS_AS(
        parse_job(
            R"({"mode": "implicit", "x_vars": ["X1"], "y_vars": ["Y1"], "equations": ["Y1 - X1"], "point": {"X1": {"mid": "2", "rad": "-1"}, "Y1": "2"}})"),
        ValidationError);
    CHECK_THROWS_AS(parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": ["X1"], "seed": -3})"),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_job(R"({"mode": "polynomial_map", "x_vars": ["X1"], "equations": ["X1"], "precision_bits": 0})"),
        ValidationError);
}

TEST_CASE("decimal point strings get one-ulp radii") {
    JobSpec job = parse_job(
        R"({"mode": "implicit", "x_vars": ["X1"], "y_vars": ["Y1"], "equations": ["Y1 - X1"],
            "point": {"X1": "2.0767", "Y1": {"mid": "1/3", "rad": "1/1000"}}})");
    CHECK(job.point->at("X1").mid() == Rational(20767, 10000));
    CHECK(job.point->at("X1").rad() == Rational(1, 10000));
    CHECK(job.point->at("Y1").mid() == Rational(1, 3));
}

TEST_CASE("job round trip through canonical form") {
    std::string text = R"({
      "mode": "partial",
      "x_vars": ["X1", "X2", "X3"],
      "y_vars": ["Y1", "Y2"],
      "m": 2,
      "equations": ["Y1 - X1*X3", "Y2 - X2 - X3^2"],
      "point": {"X1": {"mid": "3", "rad": "0"}, "X2": {"mid": "1/2", "rad": "1/100"},
                 "X3": {"mid": "1", "rad": "0"}, "Y1": {"mid": "3", "rad": "0"},
                 "Y2": {"mid": "3/2", "rad": "1/10"}},
      "assumptions": ["X1, X2, X3 independent by the elliptic parametrization"],
      "seed": 42,
      "precision_bits": 96
    })";
    JobSpec job = parse_job(text);
    JobSpec again = parse_job(format_canonical(job));
    CHECK(again == job);
    CHECK(job_digest(again) == job_digest(job));

    JobSpec map_job = parse_job(minimal_map_job());
    CHECK(parse_job(format_canonical(map_job)) == map_job);
}
