#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "catode/exact_arith.hpp"

namespace catode {

/// Truncated formal power series c_0 + c_1 t + ... + c_K t^K over the rationals.
/// The truncation order K is the highest retained power; binary operations
/// truncate to the smaller of the two orders.
class Series {
public:
    /// The zero series of order K.
    explicit Series(std::size_t order);
    /// Takes ownership of coefficients c_0..c_K; must be non-empty.
    explicit Series(std::vector<Rational> coefficients);

    static Series constant(const Rational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Same series cut down to a lower order.
    Series truncated(std::size_t order) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, const Series& a);

    /// Equality over the common order only.
    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<Rational> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);

/// a^r by repeated squaring; r = 0 gives the constant 1 at a's order.
Series series_pow(const Series& a, unsigned long r);

/// Termwise derivative; drops the order by one. Order-0 input throws
/// std::domain_error("cannot differentiate order-0 series").
Series series_derivative(const Series& a);

/// n-fold derivative.
Series series_derivative(const Series& a, unsigned long n);

/// (1 - 4t)^alpha to order K.
Series series_binomial_power(const Rational& alpha, std::size_t order);

/// C_0 + C_1 t + ... + C_K t^K with each C_n from binom(2n, n)/(n+1).
Series series_catalan(std::size_t order);

/// sqrt(1 + y) to order K with coefficient binom(2n, n)(-1)^(n-1)/(4^n (2n-1)).
Series series_sqrt_one_plus(std::size_t order);

/// Index of the first coefficient where a and b differ within their common
/// order, or nullopt if they agree.
std::optional<std::size_t> first_mismatch(const Series& a, const Series& b);

}  // namespace catode
