#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catode/catalan.hpp"
#include "catode/power_series.hpp"
#include "oracles.hpp"

using namespace catode;

namespace {

Series ints(std::initializer_list<long> values)
{
    std::vector<Rational> c;
    for (long v : values) {
        c.emplace_back(v);
    }
    return Series(std::move(c));
}

Series random_series(std::mt19937_64& rng, std::size_t order)
{
    std::vector<Rational> c;
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(oracle::small_rational(rng));
    }
    return Series(std::move(c));
}

std::vector<Integer> integer_coefficients(const Series& s)
{
    std::vector<Integer> out;
    for (const auto& c : s.coefficients()) {
        out.push_back(c.to_integer());
    }
    return out;
}

}  // namespace

TEST_CASE("series_add")
{
    CHECK(series_add(ints({1, 1}), ints({1, -1})) == ints({2, 0}));
    const Series a = ints({3, -1, 4, 1});
    CHECK(series_add(a, Series(3)) == a);
    const Series c = series_catalan(10);
    const Series sum = series_add(c, -c);
    CHECK(sum == Series(10));
    CHECK(sum.order() == 10);
}

TEST_CASE("arithmetic truncates to the smaller order")
{
    const Series a = ints({1, 2, 3, 4, 5});
    const Series b = ints({1, 1});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    CHECK(a * b == ints({1, 3}));
}

TEST_CASE("series_mul")
{
    CHECK(series_mul(ints({1, 1, 0}), ints({1, 1, 0})) == ints({1, 2, 1}));

    // C(t) (1 + sqrt(1 - 4t)) = 2
    const std::size_t K = 40;
    const Series one_plus_root = Series::constant(1, K) + series_binomial_power(Rational::make(1, 2), K);
    CHECK(series_mul(series_catalan(K), one_plus_root) == Series::constant(2, K));

    // C^2 by plain convolution of the Catalan list
    const auto cat = catalan_recurrence(5);
    const auto expected = oracle::convolve(cat, cat, 6);
    const Series square = series_mul(series_catalan(5), series_catalan(5));
    CHECK(integer_coefficients(square) == expected);
    CHECK(integer_coefficients(square) == std::vector<Integer>{1, 2, 5, 14, 42, 132});
}

TEST_CASE("series_pow")
{
    const Series a = ints({2, 7, 1});
    CHECK(series_pow(a, 0) == Series::constant(1, 2));
    CHECK(integer_coefficients(series_pow(series_catalan(4), 1)) == std::vector<Integer>{1, 1, 2, 5, 14});

    // Coefficient of t^2 in C^3 from an explicit triple sum
    const auto cat = catalan_recurrence(2);
    Integer triple = 0;
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; i + j <= 2; ++j) {
            triple += cat[i] * cat[j] * cat[2 - i - j];
        }
    }
    CHECK(series_pow(series_catalan(2), 3)[2] == Rational(triple));
    CHECK(triple == 9);

    CHECK(series_pow(a, 5) == a * a * a * a * a);
}

TEST_CASE("series_derivative")
{
    CHECK(series_derivative(ints({1, 3, 1})) == ints({3, 2}));
    CHECK(series_derivative(ints({1, 3, 1})).order() == 1);
    CHECK_THROWS_WITH_AS(series_derivative(ints({5})), "cannot differentiate order-0 series", std::domain_error);

    // (n + 1) C_{n+1}
    const Series d = series_derivative(series_catalan(3));
    CHECK(integer_coefficients(d) == std::vector<Integer>{1 * 1, 2 * 2, 3 * 5});

    // N-th derivative coefficient n is C_{n+N} (n+N)_N
    const std::size_t K = 30;
    for (unsigned long N = 1; N <= 6; ++N) {
        const Series dN = series_derivative(series_catalan(K), N);
        REQUIRE(dN.order() == K - N);
        for (unsigned long n = 0; n <= K - N; ++n) {
            const Rational expected =
                Rational(catalan_closed(n + N)) * falling_factorial(Rational(static_cast<long>(n + N)), N);
            CHECK(dN[n] == expected);
        }
    }
}

TEST_CASE("series_binomial_power")
{
    CHECK(series_binomial_power(1, 2) == ints({1, -4, 0}));
    CHECK(series_binomial_power(-1, 3) == ints({1, 4, 16, 64}));

    const Series root = series_binomial_power(Rational::make(1, 2), 4);
    CHECK(root * root == ints({1, -4, 0, 0, 0}));
    CHECK(root == ints({1, -2, -2, -4, -10}));
}

TEST_CASE("series_catalan")
{
    CHECK(integer_coefficients(series_catalan(4)) == std::vector<Integer>{1, 1, 2, 5, 14});

    // C = 1 + t C^2 against the convolution recurrence
    const std::size_t K = 30;
    const Series c = series_catalan(K);
    const Series c2 = c * c;
    std::vector<Rational> shifted{Rational(1)};
    for (std::size_t n = 1; n <= K; ++n) {
        shifted.push_back(c2[n - 1]);
    }
    CHECK(c == Series(shifted));

    // sqrt(1 - 4t) C = 2 - C
    const Series s = series_binomial_power(Rational::make(1, 2), K);
    CHECK(s * c == Series::constant(2, K) - c);
}

TEST_CASE("series_sqrt_one_plus")
{
    const Series s = series_sqrt_one_plus(40);
    CHECK(s[0] == Rational(1));
    CHECK(s[2] == binomial_general(Rational::make(1, 2), 2));
    CHECK(s[2] == Rational::make(-1, 8));
    // (1 + y)^{1/2}: replacing -4t by y divides coefficient m by (-4)^m
    const Series minus = series_binomial_power(Rational::make(1, 2), 40);
    for (std::size_t n = 0; n <= 40; ++n) {
        CHECK(s[n] == minus[n] / rat_pow(Rational(-4), static_cast<long>(n)));
    }
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 16);
        const Series b = random_series(rng, 16);
        const Series c = random_series(rng, 16);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("binomial powers with opposite exponents are inverse")
{
    const std::size_t K = 32;
    for (const Rational alpha : {Rational::make(1, 2), Rational::make(-1, 2), Rational::make(3, 2), Rational::make(-5, 2)}) {
        CAPTURE(alpha);
        CHECK(series_binomial_power(alpha, K) * series_binomial_power(-alpha, K) == Series::constant(1, K));
    }
    const Series root = series_binomial_power(Rational::make(1, 2), K);
    std::vector<Rational> one_minus_four_t(K + 1, Rational(0));
    one_minus_four_t[0] = 1;
    one_minus_four_t[1] = -4;
    CHECK(root * root == Series(one_minus_four_t));
    CHECK((root * root).order() == K);
}

TEST_CASE("Leibniz rule")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 16);
        const Series b = random_series(rng, 16);
        const Series lhs = series_derivative(a * b);
        const Series rhs = series_derivative(a) * b + a * series_derivative(b);
        CHECK(lhs.order() == 15);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series_catalan agrees with catalan_closed")
{
    const Series c = series_catalan(200);
    for (unsigned long n = 0; n <= 200; ++n) {
        CHECK(c[n] == Rational(catalan_closed(n)));
    }
}
