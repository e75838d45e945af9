#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catode/algebraic_field.hpp"
#include "catode/coefficients.hpp"

using namespace catode;

TEST_CASE("a_table_recurrence rows")
{
    const CoeffTable a = a_table_recurrence(4);
    CHECK(a.row(1) == std::vector<Integer>{1});
    CHECK(a.row(2) == std::vector<Integer>{2, 2});
    CHECK(a.row(3) == std::vector<Integer>{12, 12, 6});
    CHECK_THROWS_AS(a_table_recurrence(0), std::invalid_argument);
    CHECK_THROWS_AS(a.row(5), std::out_of_range);
    CHECK_THROWS_AS(a.at(0, 3), std::out_of_range);
    CHECK_THROWS_AS(a.at(4, 3), std::out_of_range);
}

TEST_CASE("row 3 of the a-family reproduces the third derivative of C")
{
    // C''' = 12 s^{-5} C^2 + 12 s^{-4} C^3 + 6 s^{-3} C^4, checked in the quadratic field.
    const AlgebraicElement c = alg_catalan();
    const AlgebraicElement rhs = Rational(12) * alg_half_power(-5) * c * c +
                                 Rational(12) * alg_half_power(-4) * c * c * c +
                                 Rational(6) * alg_half_power(-3) * c * c * c * c;
    CHECK(alg_derivative(c, 3) == rhs);
}

TEST_CASE("a_closed_form")
{
    CHECK(a_closed_form(1, 1) == 1);
    CHECK(a_closed_form(2, 3) == a_table_recurrence(3).at(2, 3));
    CHECK(a_closed_form(2, 3) == 12);
    CHECK_THROWS_AS(a_closed_form(0, 3), std::out_of_range);
    CHECK_THROWS_AS(a_closed_form(4, 3), std::out_of_range);
}

TEST_CASE("closed-form template at i = N gives N!")
{
    for (unsigned long N = 1; N <= 10; ++N) {
        CHECK(a_closed_form(N, N) == factorial(N));
    }
}

TEST_CASE("a closed form matches the recurrence for N <= 12")
{
    const CoeffTable a = a_table_recurrence(12);
    for (unsigned long N = 1; N <= 12; ++N) {
        for (unsigned long i = 1; i <= N; ++i) {
            CAPTURE(N);
            CAPTURE(i);
            CHECK(a_closed_form(i, N) == a.at(i, N));
        }
    }
}

TEST_CASE("a-family boundaries and signs")
{
    const CoeffTable a = a_table_recurrence(14);
    for (unsigned long N = 1; N <= 14; ++N) {
        CHECK(a.at(1, N) == int_pow(2, N - 1) * double_factorial_odd(2 * static_cast<long>(N) - 3));
        CHECK(a.at(N, N) == factorial(N));
        for (const auto& v : a.row(N)) {
            CHECK(v > 0);
        }
    }
}

TEST_CASE("s_number")
{
    CHECK(s_number(4, 1) == 10);
    CHECK(s_number(1, 2) == 1 * s_number(2, 1));
    CHECK(s_number(1, 2) == 3);
    CHECK(s_number(2, 2) == 2 * s_number(3, 1) + 1 * s_number(2, 1));
    CHECK(s_number(2, 2) == 15);
    for (unsigned long N = 1; N <= 20; ++N) {
        CHECK(s_number(N, 1) == Integer(N * (N + 1) / 2));
        for (unsigned long j = 1; j <= 5; ++j) {
            CHECK(s_number(N, j) > 0);
        }
    }
    CHECK_THROWS_AS(s_number(0, 1), std::out_of_range);
    CHECK_THROWS_AS(s_number(1, 0), std::out_of_range);
}

TEST_CASE("b_table_recurrence rows")
{
    const CoeffTable b = b_table_recurrence(4);
    CHECK(b.row(1) == std::vector<Integer>{1});
    CHECK(b.row(2) == std::vector<Integer>{1, -2});
    CHECK(b.row(3) == std::vector<Integer>{1, -6});
    CHECK(b.row(4) == std::vector<Integer>{1, -12, 12});
    // b_2(4) = -2(3 + 2 - 4) b_1(3) + b_2(3), with b_2(3) read as zero
    CHECK(b.at(2, 3) == 0);
    CHECK(b.at(2, 4) == -2 * (3 + 2 - 4) * b.at(1, 3) + b.at(2, 3));
    CHECK(b.at(2, 4) == 4 * s_number(1, 2));
}

TEST_CASE("b_closed_form")
{
    for (unsigned long N = 1; N <= 10; ++N) {
        CHECK(b_closed_form(0, N) == 1);
    }
    CHECK(b_closed_form(1, 3) == -2 * s_number(2, 1));
    CHECK(b_closed_form(1, 3) == -6);
    CHECK(b_closed_form(2, 4) == b_table_recurrence(4).at(2, 4));
    CHECK(b_closed_form(2, 4) == 12);
    CHECK_THROWS_AS(b_closed_form(3, 5), std::out_of_range);
    CHECK_THROWS_AS(b_closed_form(0, 0), std::out_of_range);
}

TEST_CASE("b closed form matches the recurrence for N <= 16")
{
    const CoeffTable b = b_table_recurrence(16);
    for (unsigned long N = 1; N <= 16; ++N) {
        REQUIRE(b.row(N).size() == N / 2 + 1);
        for (unsigned long i = 0; i <= N / 2; ++i) {
            CAPTURE(N);
            CAPTURE(i);
            CHECK(b_closed_form(i, N) == b.at(i, N));
            if (i >= 1) {
                CHECK(sgn(b.at(i, N)) == (i % 2 == 0 ? 1 : -1));
            }
        }
        CHECK(b.at(0, N) == 1);
    }
}

TEST_CASE("closed_form_table has the recurrence shape")
{
    CHECK(closed_form_table(Family::a, 9).to_json() == a_table_recurrence(9).to_json());
    CHECK(closed_form_table(Family::b, 9).to_json() == b_table_recurrence(9).to_json());
}

TEST_CASE("tables export as JSON with decimal strings")
{
    const CoeffTable b = b_table_recurrence(4);
    const auto j = b.to_json();
    CHECK(j.dump() ==
          R"({"family":"b","rows":[{"N":1,"entries":["1"]},{"N":2,"entries":["1","-2"]},{"N":3,"entries":["1","-6"]},{"N":4,"entries":["1","-12","12"]}]})");

    const CoeffTable a = a_table_recurrence(20);
    const CoeffTable back = CoeffTable::from_json(nlohmann::json::parse(a.to_json().dump()));
    CHECK(back.family() == Family::a);
    CHECK(back.max_N() == 20);
    CHECK(back.row(20) == a.row(20));
    CHECK(a.row(20).front().get_str() == back.to_json()["rows"][19]["entries"][0].get<std::string>());

    CHECK_THROWS_AS(CoeffTable::from_json(nlohmann::json::parse(R"({"family":"c","rows":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(CoeffTable::from_json(nlohmann::json::parse(R"({"family":"a","rows":[{"N":2,"entries":["1"]}]})")),
                    std::invalid_argument);
}
