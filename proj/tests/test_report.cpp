#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "catode/report.hpp"

using namespace catode;
using nlohmann::ordered_json;

namespace {

VerificationReport passing_thm1()
{
    VerificationReport r;
    r.id = IdentityId::thm1;
    r.parameters = {{"N", 2}};
    r.mode = Mode::symbolic;
    r.passed = true;
    return r;
}

VerificationReport failing_thm2()
{
    VerificationReport r;
    r.id = IdentityId::thm2;
    r.parameters = {{"N", 3}, {"n", 4}};
    r.mode = Mode::exact;
    r.passed = false;
    r.witness = Witness{7, "4862", "4861", ""};
    return r;
}

const EmitOptions kJson{ReportFormat::json, false};

}  // namespace

TEST_CASE("empty JSON report")
{
    CHECK(emit_report({}, kJson) == "{\"version\":\"1\",\"reports\":[]}\n");
}

TEST_CASE("passing report instance")
{
    const auto doc = ordered_json::parse(emit_report({passing_thm1()}, kJson));
    CHECK(validate_report_json(doc).empty());
    const auto& r = doc["reports"][0];
    CHECK(r["passed"] == true);
    CHECK(r["parameters"] == ordered_json::parse(R"({"N":2})"));
    CHECK(r["id"] == "thm1");
    CHECK(r["mode"] == "symbolic");
    CHECK_FALSE(r.contains("witness"));
    CHECK_FALSE(r.contains("cost_ms"));
}

TEST_CASE("failing report carries a witness")
{
    const auto doc = ordered_json::parse(emit_report({failing_thm2()}, kJson));
    CHECK(validate_report_json(doc).empty());
    const auto& w = doc["reports"][0]["witness"];
    CHECK(w["index"] == 7);
    CHECK(w["expected"] == "4862");
    CHECK(w["actual"] == "4861");
}

TEST_CASE("timings are opt-in")
{
    VerificationReport r = passing_thm1();
    r.cost = std::chrono::milliseconds(3);
    const auto doc = ordered_json::parse(emit_report({r}, EmitOptions{ReportFormat::json, true}));
    CHECK(validate_report_json(doc).empty());
    CHECK(doc["reports"][0]["cost_ms"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("JSON round trip is byte-identical")
{
    VerificationReport big = failing_thm2();
    big.witness->expected = "123456789012345678901234567890123456789";
    big.witness->detail = "first mismatch";
    const std::vector<VerificationReport> reports{big, passing_thm1()};
    const std::string text = emit_report(reports, kJson);
    const auto parsed = parse_report_json(text);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[1].witness->expected == big.witness->expected);
    CHECK(emit_report(parsed, kJson) == text);
}

TEST_CASE("validator rejects malformed documents")
{
    CHECK_FALSE(validate_report_json(ordered_json::parse("[]")).empty());
    CHECK_FALSE(validate_report_json(ordered_json::parse(R"({"version":"2","reports":[]})")).empty());
    CHECK_FALSE(validate_report_json(ordered_json::parse(R"({"version":"1"})")).empty());
    CHECK_FALSE(validate_report_json(ordered_json::parse(R"({"version":"1","reports":[],"extra":1})")).empty());
    CHECK_FALSE(validate_report_json(ordered_json::parse(
                                         R"({"version":"1","reports":[{"id":"thm9","parameters":{},"mode":"exact","passed":true}]})"))
                    .empty());
    CHECK_FALSE(validate_report_json(ordered_json::parse(
                                         R"({"version":"1","reports":[{"id":"thm1","parameters":{"N":"2"},"mode":"exact","passed":true}]})"))
                    .empty());
    CHECK_FALSE(validate_report_json(ordered_json::parse(
                                         R"({"version":"1","reports":[{"id":"thm1","parameters":{},"mode":"exact","passed":false}]})"))
                    .empty());
    CHECK_FALSE(
        validate_report_json(
            ordered_json::parse(
                R"({"version":"1","reports":[{"id":"thm1","parameters":{},"mode":"exact","passed":false,"witness":{"index":1,"expected":2,"actual":"3"}}]})"))
            .empty());
    CHECK_THROWS_AS(parse_report_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_report_json(R"({"version":"1"})"), std::invalid_argument);
}

TEST_CASE("ordering does not depend on input order")
{
    std::vector<VerificationReport> reports;
    for (long long N = 1; N <= 12; ++N) {
        VerificationReport r = passing_thm1();
        r.parameters = {{"N", N}};
        reports.push_back(r);
        r.mode = Mode::series;
        r.parameters["K"] = 64;
        reports.push_back(r);
    }
    reports.push_back(failing_thm2());
    VerificationReport eq57;
    eq57.id = IdentityId::eq57;
    eq57.passed = true;
    eq57.parameters = {{"N", 1}};
    reports.push_back(eq57);

    const std::string reference = emit_report(reports, kJson);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(reports.begin(), reports.end(), rng);
        CHECK(emit_report(reports, kJson) == reference);
    }
    // identity order first, then parameters
    const auto doc = ordered_json::parse(reference);
    CHECK(doc["reports"].front()["id"] == "thm1");
    CHECK(doc["reports"].back()["id"] == "eq57");
}

TEST_CASE("human table")
{
    const std::string text = emit_report({failing_thm2(), passing_thm1()});
    CHECK(text.rfind("identity", 0) == 0);
    CHECK(text.find("thm1") < text.find("thm2"));
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("expected 4862, got 4861") != std::string::npos);
    CHECK(text.find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("names round-trip")
{
    for (const auto id : {IdentityId::thm1, IdentityId::thm4, IdentityId::eq62, IdentityId::asymptotic}) {
        CHECK(parse_identity(to_string(id)) == id);
    }
    for (const auto mode : {Mode::series, Mode::symbolic, Mode::numeric, Mode::exact}) {
        CHECK(parse_mode(to_string(mode)) == mode);
    }
    CHECK_FALSE(parse_identity("eq65").has_value());
}
