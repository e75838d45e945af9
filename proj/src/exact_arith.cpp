#include "catode/exact_arith.hpp"

#include <stdexcept>

namespace catode {

Rational Rational::make(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    return Rational(mpq_class(num, den));
}

Rational Rational::parse(const std::string& text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (q.get_den() == 0) {
        throw std::domain_error("division by zero");
    }
    return Rational(std::move(q));
}

Integer Rational::to_integer() const
{
    if (!is_integer()) {
        throw std::domain_error("non-integral value " + to_string());
    }
    return value_.get_num();
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Integer factorial(unsigned long n)
{
    Integer result = 1;
    for (unsigned long k = 2; k <= n; ++k) {
        result *= k;
    }
    return result;
}

Integer int_pow(const Integer& base, unsigned long exp)
{
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

Rational rat_pow(const Rational& base, long exp)
{
    if (exp < 0) {
        return rat_pow(base.inverse(), -exp);
    }
    const auto e = static_cast<unsigned long>(exp);
    return Rational::make(int_pow(base.numerator(), e), int_pow(base.denominator(), e));
}

Rational falling_factorial(const Rational& x, unsigned long n)
{
    return shifted_factorial(x, Rational(1), n);
}

Rational shifted_factorial(const Rational& x, const Rational& alpha, unsigned long n)
{
    Rational result = 1;
    Rational factor = x;
    for (unsigned long k = 0; k < n; ++k) {
        result *= factor;
        factor -= alpha;
    }
    return result;
}

Integer double_factorial_odd(long k)
{
    if (k % 2 == 0 || k < -1) {
        throw std::domain_error("double factorial out of domain");
    }
    Integer result = 1;
    for (long j = k; j > 1; j -= 2) {
        result *= j;
    }
    return result;
}

Rational binomial_general(const Rational& alpha, unsigned long m)
{
    return falling_factorial(alpha, m) / Rational(factorial(m));
}

Integer binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace catode
