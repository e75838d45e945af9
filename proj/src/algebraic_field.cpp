#include "catode/algebraic_field.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace catode {

namespace {

std::atomic<std::size_t> g_degree_cap{kDefaultDegreeCap};

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Integer content(const IntPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

void make_primitive(IntPoly& p)
{
    trim(p);
    if (p.empty()) {
        return;
    }
    Integer g = content(p);
    if (p.back() < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& c : p) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// Scales a rational polynomial by the lcm of its denominators.
IntPoly clear_denominators(const Polynomial& p)
{
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) {
        const Integer d = c.denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    IntPoly out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        out.push_back(c.numerator() * (lcm / c.denominator()));
    }
    return out;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b)
{
    const Integer& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) {
            c *= lb;
        }
        for (std::size_t k = 0; k <= db; ++k) {
            a[k + shift] -= la * b[k];
        }
        trim(a);
    }
    return a;
}

void check_cap(std::size_t degree)
{
    const std::size_t cap = g_degree_cap.load(std::memory_order_relaxed);
    if (degree > cap) {
        throw DegreeCapExceeded("polynomial degree " + std::to_string(degree) + " exceeds cap " +
                                std::to_string(cap));
    }
}

Polynomial one_minus_four_t() { return Polynomial({Rational(1), Rational(-4)}); }

// Power series quotient p/d to the given order; d(0) must be nonzero.
std::vector<Rational> series_quotient(const Polynomial& p, const Polynomial& d, std::size_t order)
{
    std::vector<Rational> q(order + 1, Rational(0));
    const Rational d0_inv = d.coefficient(0).inverse();
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = p.coefficient(n);
        const std::size_t jmax = std::min<std::size_t>(n, d.size() == 0 ? 0 : d.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            acc -= d.coefficients()[j] * q[n - j];
        }
        q[n] = acc * d0_inv;
    }
    return q;
}

}  // namespace

void set_degree_cap(std::size_t cap) { g_degree_cap.store(cap, std::memory_order_relaxed); }

std::size_t degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

// ---- Polynomial ----

Polynomial::Polynomial(const Rational& c)
{
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k)
{
    check_cap(k);
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

std::size_t Polynomial::valuation() const
{
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v].is_zero()) {
        ++v;
    }
    return v;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d.push_back(Rational(static_cast<long>(k)) * coeffs_[k]);
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    const Rational inv = leading().inverse();
    Polynomial r(*this);
    for (auto& c : r.coeffs_) {
        c *= inv;
    }
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> v(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k) {
        v[k] += a.coeffs_[k];
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        v[k] += b.coeffs_[k];
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    check_cap(a.size() + b.size() - 2);
    std::vector<Rational> v(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("division by zero");
    }
    std::vector<Rational> rem = coeffs_;
    const std::size_t db = divisor.size() - 1;
    if (rem.size() < divisor.size()) {
        return {Polynomial{}, *this};
    }
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational inv_lead = divisor.leading().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rational q = rem[k] * inv_lead;
        quot[k - db] = q;
        if (q.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= q * divisor.coeffs_[j];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << coeffs_[k] << ")";
        if (k == 1) {
            os << "*t";
        } else if (k > 1) {
            os << "*t^" << k;
        }
    }
    return os.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.degree() == 0 || b.degree() == 0) {
        return Polynomial(Rational(1));
    }
    IntPoly x = clear_denominators(a);
    IntPoly y = clear_denominators(b);
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) {
        std::swap(x, y);
    }
    while (!y.empty()) {
        IntPoly r = pseudo_remainder(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
        if (y.size() == 1) {
            return Polynomial(Rational(1));
        }
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(x.size());
    for (const auto& c : x) {
        coeffs.emplace_back(c);
    }
    return Polynomial(std::move(coeffs)).monic();
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw std::domain_error("division by zero");
    }
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        const Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).quotient;
            den_ = den_.divmod(g).quotient;
        }
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Polynomial scale(lead.inverse());
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
}

RationalFunction RationalFunction::derivative() const
{
    if (den_.degree() == 0) {
        return RationalFunction(num_.derivative());
    }
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.den_ == b.den_) {
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    // Combine over lcm(den_a, den_b) to keep degrees down.
    const Polynomial g = poly_gcd(a.den_, b.den_);
    const Polynomial a_cof = b.den_.divmod(g).quotient;
    const Polynomial b_cof = a.den_.divmod(g).quotient;
    return RationalFunction(a.num_ * a_cof + b.num_ * b_cof, a.den_ * a_cof);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    // Cross-cancel first so the products stay reduced.
    const Polynomial g1 = poly_gcd(a.num_, b.den_);
    const Polynomial g2 = poly_gcd(b.num_, a.den_);
    const Polynomial an = a.num_.divmod(g1).quotient;
    const Polynomial bd = b.den_.divmod(g1).quotient;
    const Polynomial bn = b.num_.divmod(g2).quotient;
    const Polynomial ad = a.den_.divmod(g2).quotient;
    return RationalFunction(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string() const
{
    if (den_.degree() == 0) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---- AlgebraicElement ----

AlgebraicElement AlgebraicElement::s() { return AlgebraicElement(RationalFunction{}, RationalFunction(Rational(1))); }

AlgebraicElement AlgebraicElement::t() { return AlgebraicElement(RationalFunction(Polynomial::monomial(1, 1))); }

AlgebraicElement AlgebraicElement::operator-() const { return AlgebraicElement(-even_, -odd_); }

AlgebraicElement operator+(const AlgebraicElement& x, const AlgebraicElement& y)
{
    return AlgebraicElement(x.even_ + y.even_, x.odd_ + y.odd_);
}

AlgebraicElement operator-(const AlgebraicElement& x, const AlgebraicElement& y)
{
    return AlgebraicElement(x.even_ - y.even_, x.odd_ - y.odd_);
}

AlgebraicElement operator*(const AlgebraicElement& x, const AlgebraicElement& y)
{
    const RationalFunction s_squared(one_minus_four_t());
    return AlgebraicElement(x.even_ * y.even_ + x.odd_ * y.odd_ * s_squared, x.even_ * y.odd_ + x.odd_ * y.even_);
}

AlgebraicElement operator/(const AlgebraicElement& x, const AlgebraicElement& y) { return x * alg_inverse(y); }

std::string AlgebraicElement::to_string() const { return "[" + even_.to_string() + "] + [" + odd_.to_string() + "]*s"; }

AlgebraicElement alg_mul(const AlgebraicElement& x, const AlgebraicElement& y) { return x * y; }

AlgebraicElement alg_inverse(const AlgebraicElement& x)
{
    if (alg_is_zero(x)) {
        throw std::domain_error("inversion of zero");
    }
    const auto& a = x.even_part();
    const auto& b = x.odd_part();
    // The norm a^2 - b^2(1 - 4t) vanishes only for x = 0 since 1 - 4t is not a square in Q(t).
    const RationalFunction norm = a * a - b * b * RationalFunction(one_minus_four_t());
    const RationalFunction inv = norm.inverse();
    return AlgebraicElement(a * inv, -(b * inv));
}

AlgebraicElement alg_derivative(const AlgebraicElement& x)
{
    const RationalFunction& b = x.odd_part();
    const RationalFunction two_over(Polynomial(Rational(2)), one_minus_four_t());
    return AlgebraicElement(x.even_part().derivative(), b.derivative() - b * two_over);
}

AlgebraicElement alg_derivative(const AlgebraicElement& x, unsigned long n)
{
    AlgebraicElement r = x;
    for (unsigned long k = 0; k < n; ++k) {
        r = alg_derivative(r);
    }
    return r;
}

AlgebraicElement alg_catalan()
{
    const Polynomial two_t = Polynomial::monomial(2, 1);
    return AlgebraicElement(RationalFunction(Polynomial(Rational(1)), two_t),
                            RationalFunction(Polynomial(Rational(-1)), two_t));
}

AlgebraicElement alg_half_power(long e)
{
    if (e < 0) {
        return alg_inverse(alg_half_power(-e));
    }
    const auto half = static_cast<unsigned long>(e / 2);
    Polynomial p(Rational(1));
    for (unsigned long k = 0; k < half; ++k) {
        p = p * one_minus_four_t();
    }
    if (e % 2 == 0) {
        return AlgebraicElement(RationalFunction(p));
    }
    return AlgebraicElement(RationalFunction{}, RationalFunction(p));
}

AlgebraicElement alg_pow(const AlgebraicElement& x, unsigned long r)
{
    AlgebraicElement result(Rational(1));
    AlgebraicElement base = x;
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

bool alg_is_zero(const AlgebraicElement& x) { return x.even_part().is_zero() && x.odd_part().is_zero(); }

Series alg_to_series(const AlgebraicElement& x, std::size_t order)
{
    const auto& a = x.even_part();
    const auto& b = x.odd_part();
    const std::size_t va = a.is_zero() ? 0 : a.denominator().valuation();
    const std::size_t vb = b.is_zero() ? 0 : b.denominator().valuation();
    const std::size_t shift = std::max(va, vb);
    const std::size_t work = order + shift;

    // Expands t^shift * part, whose denominator is t^v * d with d(0) != 0.
    auto expand = [&](const RationalFunction& part, std::size_t v) {
        std::vector<Rational> out(work + 1, Rational(0));
        if (part.is_zero()) {
            return out;
        }
        const auto& den = part.denominator().coefficients();
        const Polynomial reduced(std::vector<Rational>(den.begin() + static_cast<std::ptrdiff_t>(v), den.end()));
        const std::size_t offset = shift - v;
        const auto q = series_quotient(part.numerator(), reduced, work - offset);
        std::copy(q.begin(), q.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
        return out;
    };

    const Series even_series(expand(a, va));
    const Series odd_series(expand(b, vb));
    const Series total = even_series + odd_series * series_binomial_power(Rational::make(1, 2), work);
    for (std::size_t k = 0; k < shift; ++k) {
        if (!total[k].is_zero()) {
            throw std::domain_error("element not regular at origin");
        }
    }
    std::vector<Rational> c(total.coefficients().begin() + static_cast<std::ptrdiff_t>(shift),
                            total.coefficients().end());
    return Series(std::move(c));
}

}  // namespace catode
