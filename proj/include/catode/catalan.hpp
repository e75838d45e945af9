#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "catode/exact_arith.hpp"
#include "catode/power_series.hpp"

namespace catode {

/// C_n = binom(2n, n)/(n + 1) in exact integer arithmetic.
Integer catalan_closed(unsigned long n);

/// C_n as the rational product prod_{k=2}^{n} (n + k)/k, checked integral.
Integer catalan_product(unsigned long n);

/// C_0..C_nmax from C_0 = 1, C_n = sum_{m<n} C_m C_{n-1-m}.
std::vector<Integer> catalan_recurrence(unsigned long nmax);

/// Coefficient of t^n in C(t)^r for r >= 1. Throws std::invalid_argument for r = 0.
Integer higher_catalan(unsigned long r, unsigned long n);

/// Table of C(t)^r for r = 0..max_r to a fixed order, sharing one Catalan prefix.
class HigherCatalanTable {
public:
    HigherCatalanTable(unsigned long max_r, std::size_t order);

    unsigned long max_r() const { return static_cast<unsigned long>(powers_.size()) - 1; }
    std::size_t order() const { return powers_.front().order(); }

    /// C_n^(r); throws std::out_of_range outside the table.
    Integer operator()(unsigned long r, unsigned long n) const;

private:
    std::vector<Series> powers_;
};

/// C_n n^{3/2} sqrt(pi) / 4^n at 256-bit working precision; tends to 1.
/// Throws std::invalid_argument for n = 0.
mpf_class catalan_asymptotic_ratio(unsigned long n);

}  // namespace catode
