#pragma once

// Test-only reference computations. These deliberately avoid the library's
// series and closed-form code paths so they can serve as independent checks.

#include <cstdint>
#include <random>
#include <vector>

#include "catode/exact_arith.hpp"

namespace oracle {

using catode::Integer;
using catode::Rational;

/// Catalan numbers by counting Dyck paths with a ballot-table DP.
inline std::vector<Integer> dyck_path_counts(unsigned nmax)
{
    std::vector<Integer> out;
    for (unsigned n = 0; n <= nmax; ++n) {
        // ways[h] = number of prefixes ending at height h
        std::vector<Integer> ways(n + 2, 0);
        ways[0] = 1;
        for (unsigned step = 0; step < 2 * n; ++step) {
            std::vector<Integer> next(n + 2, 0);
            for (unsigned h = 0; h <= n; ++h) {
                if (ways[h] == 0) {
                    continue;
                }
                if (h + 1 <= n) {
                    next[h + 1] += ways[h];
                }
                if (h > 0) {
                    next[h - 1] += ways[h];
                }
            }
            ways = std::move(next);
        }
        out.push_back(ways[0]);
    }
    return out;
}

/// Plain Cauchy product of two integer coefficient lists, truncated to `len`.
inline std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t len)
{
    std::vector<Integer> out(len, 0);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// ln 2 = sum_{k>=1} 1/(k 2^k); truncation error is below 2^{-terms}.
inline Rational ln2_series(unsigned terms)
{
    Rational sum = 0;
    for (unsigned k = 1; k <= terms; ++k) {
        sum += Rational::make(1, Integer(k) * catode::int_pow(2, k));
    }
    return sum;
}

/// Random rational with numerator/denominator up to `bits` bits.
inline Rational random_rational(std::mt19937_64& rng, unsigned bits)
{
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(rng()));
    Integer num = gen.get_z_bits(bits);
    Integer den = gen.get_z_bits(bits) + 1;
    if (rng() & 1U) {
        num = -num;
    }
    return Rational::make(num, den);
}

/// Small random rational num/den with |num| <= 9, 1 <= den <= 5.
inline Rational small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational::make(num(rng), den(rng));
}

}  // namespace oracle
