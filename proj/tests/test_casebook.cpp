#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algind/casebook.hpp"
#include "algind/report.hpp"

using namespace algind;

namespace {

bool has_check(const CaseReport& r, const std::string& needle, bool expect) {
    for (const auto& c : r.checks)
        if (c.name.find(needle) != std::string::npos) return c.passed == expect;
    return false;
}

} // namespace

TEST_CASE("catalog lists the documented cases in stable order") {
    auto cases = list_cases();
    REQUIRE(cases.size() == 5);
    CHECK(cases[0].id == "fib-zeta-elliptic");
    CHECK(cases[0].needs_user_polynomials);
    std::vector<std::string> ids;
    for (const auto& c : cases) ids.push_back(c.id);
    CHECK(std::count(ids.begin(), ids.end(), "ramanujan-P-identity") == 1);
    CHECK(std::count(ids.begin(), ids.end(), "a7-a3-relation") == 1);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) CHECK(ids[i] != ids[j]);
    CHECK(list_cases()[3].id == cases[3].id);
}

TEST_CASE("unknown case id") { CHECK_THROWS_AS(run_case("no-such-case", Precision(64)), ValidationError); }

TEST_CASE("elementary symmetric case") {
    CaseReport r = run_case("elementary-symmetric", Precision(64));
    CHECK(r.status == CaseStatus::Pass);
    REQUIRE(r.verdicts.size() == 1);
    CHECK(r.verdicts[0].verdict.conclusion == Conclusion::Independent);
}

TEST_CASE("a7-a3 relation case") {
    CaseReport r = run_case("a7-a3-relation", Precision(64));
    CHECK(r.status == CaseStatus::Pass);
    REQUIRE(r.residuals.size() == 1);
    CHECK(r.residuals[0].value.contains_zero());
    REQUIRE(r.verdicts.size() == 1);
    CHECK(r.verdicts[0].verdict.conclusion == Conclusion::Dependent);
    CHECK(has_check(r, "Dependent", true));
}

TEST_CASE("ramanujan P identity case") {
    CaseReport r = run_case("ramanujan-P-identity", Precision(64));
    CHECK(r.status == CaseStatus::Pass);
    CHECK(r.residuals[0].value.contains_zero());
}

TEST_CASE("theta partition case") {
    CaseReport r = run_case("theta-partition", Precision(64));
    CHECK(r.status == CaseStatus::Pass);
    CHECK(r.values.size() == 3);
}

TEST_CASE("fib-zeta-elliptic golden digits without user input") {
    CaseReport r = run_case("fib-zeta-elliptic", Precision(96));
    CHECK(r.status == CaseStatus::NeedsInput);
    CHECK(r.verdicts.empty());
    CHECK(has_check(r, "2.076730850", true));
    CHECK(has_check(r, "2.004061286", true));
    CHECK(has_check(r, "3.264710703", true));
    CHECK(has_check(r, "0.637448893", true));
    CHECK(has_check(r, "0.999718575", true));
    REQUIRE(r.values.size() == 5);
    for (const auto& v : r.values) CHECK(v.value.rad() <= Rational(1, 1000000000L));
}

TEST_CASE("fib-zeta-elliptic criterion step with user polynomials") {
    // 35-digit decimal pins vanish well inside the 96-bit enclosures, so
    // these act as honest equations; the Jacobian in (X1, X2) is the identity.
    CaseInputs inputs;
    inputs.polynomials = {
        "Y1 + X1 - 534144155381112354967445269662350594/100000000000000000000000000000000000",
        "Y2 + X2 - 264151017998193971628620565947473858/100000000000000000000000000000000000"};
    CaseReport r = run_case("fib-zeta-elliptic", Precision(96), inputs);
    CHECK(r.status == CaseStatus::Pass);
    REQUIRE(r.verdicts.size() == 1);
    CHECK(r.verdicts[0].verdict.conclusion == Conclusion::Independent);
    CHECK(r.verdicts[0].verdict.theorem_used == TheoremTag::T4);
    CHECK(r.verdicts[0].verdict.over_field == "Q(X3)");
}

TEST_CASE("fib-zeta-elliptic rejects bad user input") {
    CaseInputs one;
    one.polynomials = {"Y1"};
    CHECK_THROWS_AS(run_case("fib-zeta-elliptic", Precision(16), one), ValidationError);

    CaseInputs rational_input;
    rational_input.polynomials = {"Y1/X1", "Y2"};
    CHECK_THROWS_AS(run_case("fib-zeta-elliptic", Precision(16), rational_input), ValidationError);

    // Equations that fail the residual check are reported as inconsistent.
    CaseInputs wrong;
    wrong.polynomials = {"Y1 - 100", "Y2 - 100"};
    CHECK_THROWS_AS(run_case("fib-zeta-elliptic", Precision(16), wrong), ValidationError);
}

TEST_CASE("golden digit containment uses decimal cells, not float compare") {
    Enclosure tight(Rational::from_string("2.0767308505"), Rational(1, 100000000000L));
    CHECK(digits_certified(tight, "2.076730850"));
    CHECK(!digits_certified(tight, "2.076730851"));
    // An enclosure wider than one last-place unit never certifies.
    Enclosure wide(Rational::from_string("2.0767308505"), Rational(1, 100));
    CHECK(!digits_certified(wide, "2.076730850"));
}

TEST_CASE("case reports are reproducible bit for bit") {
    for (const char* id : {"a7-a3-relation", "elementary-symmetric", "ramanujan-P-identity"}) {
        CaseInputs inputs;
        inputs.seed = 17;
        CaseReport a = run_case(id, Precision(64), inputs);
        CaseReport b = run_case(id, Precision(64), inputs);
        ReportMeta meta;
        meta.seed = 17;
        meta.precision_bits = 64;
        CHECK(case_report_json(a, meta).dump() == case_report_json(b, meta).dump());
    }
}
