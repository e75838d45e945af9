#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catode/bfile.hpp"
#include "oracles.hpp"

using namespace catode;

namespace {

std::string read_fixture()
{
    std::ifstream in(std::string(CATODE_DATA_DIR) + "/catalan_b000108.txt");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("parse_bfile")
{
    const auto entries = parse_bfile("0 1\n1 1\n2 2");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].index == 0);
    CHECK(entries[2].index == 2);
    CHECK(entries[2].value == 2);

    const auto one = parse_bfile("# comment\n5 42");
    REQUIRE(one.size() == 1);
    CHECK(one[0].index == 5);
    CHECK(one[0].value == 42);

    CHECK(parse_bfile("").empty());
    CHECK(parse_bfile("\n\n   \n").size() == 0);
    const auto spaced = parse_bfile("  3\t\t5  \r\n");
    REQUIRE(spaced.size() == 1);
    CHECK(spaced[0].value == 5);
    CHECK(parse_bfile("1 123456789012345678901234567890")[0].value == Integer("123456789012345678901234567890"));
    CHECK(parse_bfile("1 -7")[0].value == -7);
}

TEST_CASE("malformed lines name their line number")
{
    try {
        parse_bfile("3 five");
        FAIL("expected a parse error");
    } catch (const BFileError& e) {
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).rfind("line 1:", 0) == 0);
    }
    try {
        parse_bfile("# header\n\n0 1\n1 1 1\n");
        FAIL("expected a parse error");
    } catch (const BFileError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_bfile("x 1"), BFileError);
    CHECK_THROWS_AS(parse_bfile("1"), BFileError);
    CHECK_THROWS_AS(parse_bfile("1 2x"), BFileError);
}

TEST_CASE("indices must increase")
{
    try {
        parse_bfile("0 1\n2 2\n2 5\n");
        FAIL("expected an ordering error");
    } catch (const BFileError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_bfile("4 14\n3 5\n"), BFileError);
}

TEST_CASE("crosscheck_catalan")
{
    const auto good = crosscheck_catalan(parse_bfile("0 1\n1 1\n2 2\n3 5\n4 14\n"), 200);
    CHECK(good.checked == 5);
    CHECK(good.mismatches.empty());

    const auto bad = crosscheck_catalan(parse_bfile("0 1\n5 41\n6 132\n"), 200);
    CHECK(bad.checked == 3);
    REQUIRE(bad.mismatches.size() == 1);
    CHECK(bad.mismatches[0].index == 5);
    CHECK(bad.mismatches[0].expected == 42);
    CHECK(bad.mismatches[0].actual == 41);

    // entries beyond the range or with negative index are not checked
    CHECK(crosscheck_catalan(parse_bfile("-1 9\n3 5\n10 0\n"), 5).checked == 1);
}

TEST_CASE("bundled fixture agrees with an independent count")
{
    const auto entries = parse_bfile(read_fixture());
    REQUIRE(entries.size() == 201);
    CHECK(entries.front().index == 0);
    CHECK(entries.back().index == 200);
    const auto dyck = oracle::dyck_path_counts(60);
    for (unsigned i = 0; i <= 60; ++i) {
        CHECK(entries[i].value == dyck[i]);
    }
    const auto result = crosscheck_catalan(entries, 200);
    CHECK(result.checked == 201);
    CHECK(result.mismatches.empty());
}
