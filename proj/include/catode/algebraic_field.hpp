#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "catode/exact_arith.hpp"
#include "catode/power_series.hpp"

// Exact arithmetic in F = Q(t)[s]/(s^2 = 1 - 4t) with the derivation d/dt.
// s stands for sqrt(1 - 4t); the Catalan generating function is (1 - s)/(2t).

namespace catode {

/// Raised when a product would exceed the configured polynomial degree cap.
class DegreeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on polynomial degree inside the field (4096).
inline constexpr std::size_t kDefaultDegreeCap = 4096;

void set_degree_cap(std::size_t cap);
std::size_t degree_cap();

/// Dense polynomial in t over the rationals, lowest degree first, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);
    explicit Polynomial(std::vector<Rational> coefficients);

    /// The monomial c t^k.
    static Polynomial monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    /// Coefficient of t^k, zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Multiplicity of t as a factor (0 for a nonzero constant term).
    std::size_t valuation() const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Quotient and remainder by a nonzero divisor.
    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Monic gcd; gcd(0, 0) = 0. Runs a primitive remainder sequence on the
/// integer primitive parts.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Reduced quotient of polynomials with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    /// Throws std::domain_error("division by zero") for a zero denominator.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction derivative() const;
    RationalFunction inverse() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// a(t) + b(t) s with s^2 = 1 - 4t.
class AlgebraicElement {
public:
    AlgebraicElement() = default;
    AlgebraicElement(const Rational& c) : even_(c) {}
    AlgebraicElement(RationalFunction even, RationalFunction odd = {})
        : even_(std::move(even)), odd_(std::move(odd)) {}

    /// The generator s = sqrt(1 - 4t).
    static AlgebraicElement s();
    /// The variable t.
    static AlgebraicElement t();

    const RationalFunction& even_part() const { return even_; }
    const RationalFunction& odd_part() const { return odd_; }

    AlgebraicElement operator-() const;
    friend AlgebraicElement operator+(const AlgebraicElement& x, const AlgebraicElement& y);
    friend AlgebraicElement operator-(const AlgebraicElement& x, const AlgebraicElement& y);
    friend AlgebraicElement operator*(const AlgebraicElement& x, const AlgebraicElement& y);
    friend AlgebraicElement operator/(const AlgebraicElement& x, const AlgebraicElement& y);
    friend bool operator==(const AlgebraicElement& x, const AlgebraicElement& y) = default;

    std::string to_string() const;

private:
    RationalFunction even_;
    RationalFunction odd_;
};

AlgebraicElement alg_mul(const AlgebraicElement& x, const AlgebraicElement& y);

/// (a + bs)^-1 = (a - bs)/(a^2 - b^2(1 - 4t)). Zero throws
/// std::domain_error("inversion of zero").
AlgebraicElement alg_inverse(const AlgebraicElement& x);

/// d/dt(a + bs) = a' + (b' - 2b/(1 - 4t)) s.
AlgebraicElement alg_derivative(const AlgebraicElement& x);

/// n-fold derivative.
AlgebraicElement alg_derivative(const AlgebraicElement& x, unsigned long n);

/// 2/(1 + s) in normal form, (1 - s)/(2t).
AlgebraicElement alg_catalan();

/// s^e for any integer e.
AlgebraicElement alg_half_power(long e);

/// x^r for r >= 0.
AlgebraicElement alg_pow(const AlgebraicElement& x, unsigned long r);

bool alg_is_zero(const AlgebraicElement& x);

/// Taylor coefficients 0..K of a(t) + b(t) sqrt(1 - 4t). Elements with a
/// pole at the origin throw std::domain_error("element not regular at origin").
Series alg_to_series(const AlgebraicElement& x, std::size_t order);

}  // namespace catode
