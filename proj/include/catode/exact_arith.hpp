#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace catode {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Zero is represented as 0/1, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}

    /// Canonical num/den. Throws std::domain_error("division by zero") when den == 0.
    static Rational make(const Integer& num, const Integer& den);

    /// Parses "p", "-p" or "p/q" in base 10.
    static Rational parse(const std::string& text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// The integer value; throws std::domain_error if the value is not integral.
    Integer to_integer() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational abs() const;
    Rational inverse() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_{0};
};

/// n! for n >= 0.
Integer factorial(unsigned long n);

/// Integer power base^exp.
Integer int_pow(const Integer& base, unsigned long exp);

/// Rational power for any integer exponent; negative exponents of zero throw.
Rational rat_pow(const Rational& base, long exp);

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned long n);

/// (x; alpha)_n = x(x-alpha)...(x-(n-1)alpha), with (x; alpha)_0 = 1.
Rational shifted_factorial(const Rational& x, const Rational& alpha, unsigned long n);

/// k!! for odd k >= -1, with (-1)!! = 1. Even k or k <= -3 throws
/// std::domain_error("double factorial out of domain").
Integer double_factorial_odd(long k);

/// Generalized binomial coefficient (alpha)_m / m! for rational alpha.
Rational binomial_general(const Rational& alpha, unsigned long m);

/// Ordinary binomial coefficient n choose k for 0 <= k <= n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace catode
