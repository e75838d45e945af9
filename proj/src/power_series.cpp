#include "catode/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace catode {

Series::Series(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

Series::Series(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("series needs at least one coefficient");
    }
}

Series Series::constant(const Rational& c, std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

Series Series::operator-() const
{
    Series r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Series operator+(const Series& a, const Series& b)
{
    const std::size_t k = std::min(a.order(), b.order());
    Series r(k);
    for (std::size_t n = 0; n <= k; ++n) {
        r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b)
{
    const std::size_t k = std::min(a.order(), b.order());
    Series r(k);
    for (std::size_t i = 0; i <= k; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= k; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

Series operator*(const Rational& c, const Series& a)
{
    Series r(a);
    for (auto& x : r.coeffs_) {
        x *= c;
    }
    return r;
}

bool operator==(const Series& a, const Series& b) { return !first_mismatch(a, b).has_value(); }

Series series_add(const Series& a, const Series& b) { return a + b; }

Series series_mul(const Series& a, const Series& b) { return a * b; }

Series series_pow(const Series& a, unsigned long r)
{
    Series result = Series::constant(1, a.order());
    Series base = a;
    while (r > 0) {
        if (r & 1UL) {
            result = result * base;
        }
        r >>= 1;
        if (r > 0) {
            base = base * base;
        }
    }
    return result;
}

Series series_derivative(const Series& a)
{
    if (a.order() == 0) {
        throw std::domain_error("cannot differentiate order-0 series");
    }
    std::vector<Rational> d;
    d.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        d.push_back(Rational(static_cast<long>(n)) * a[n]);
    }
    return Series(std::move(d));
}

Series series_derivative(const Series& a, unsigned long n)
{
    Series r = a;
    for (unsigned long k = 0; k < n; ++k) {
        r = series_derivative(r);
    }
    return r;
}

Series series_binomial_power(const Rational& alpha, std::size_t order)
{
    // Coefficient m is binom(alpha, m) (-4)^m, built incrementally:
    // c_{m+1} = c_m * (alpha - m)/(m + 1) * (-4).
    std::vector<Rational> c;
    c.reserve(order + 1);
    Rational term = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        c.push_back(term);
        term *= (alpha - Rational(static_cast<long>(m))) * Rational(-4) / Rational(static_cast<long>(m + 1));
    }
    return Series(std::move(c));
}

Series series_catalan(std::size_t order)
{
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(Rational::make(binomial(2 * n, n), Integer(static_cast<unsigned long>(n + 1))));
    }
    return Series(std::move(c));
}

Series series_sqrt_one_plus(std::size_t order)
{
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const long sign = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
        const Integer den = int_pow(4, n) * Integer(2 * static_cast<long>(n) - 1);
        c.push_back(Rational::make(binomial(2 * n, n) * sign, den));
    }
    return Series(std::move(c));
}

std::optional<std::size_t> first_mismatch(const Series& a, const Series& b)
{
    const std::size_t k = std::min(a.order(), b.order());
    for (std::size_t n = 0; n <= k; ++n) {
        if (a[n] != b[n]) {
            return n;
        }
    }
    return std::nullopt;
}

}  // namespace catode
