#include "catode/catalan.hpp"

#include <stdexcept>
#include <string>

namespace catode {

namespace {

constexpr mp_bitcnt_t kDecimalBits = 256;

// sqrt(pi) to 60 digits.
constexpr const char* kSqrtPi = "1.77245385090551602729816748334114518279754945612238712821380";

}  // namespace

Integer catalan_closed(unsigned long n)
{
    Integer c = binomial(2 * n, n);
    const Integer d(n + 1);
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return c;
}

Integer catalan_product(unsigned long n)
{
    Rational p = 1;
    for (unsigned long k = 2; k <= n; ++k) {
        p *= Rational::make(Integer(n + k), Integer(k));
    }
    return p.to_integer();
}

std::vector<Integer> catalan_recurrence(unsigned long nmax)
{
    std::vector<Integer> c(nmax + 1);
    c[0] = 1;
    for (unsigned long n = 1; n <= nmax; ++n) {
        Integer sum = 0;
        for (unsigned long m = 0; m < n; ++m) {
            sum += c[m] * c[n - 1 - m];
        }
        c[n] = sum;
    }
    return c;
}

Integer higher_catalan(unsigned long r, unsigned long n)
{
    if (r == 0) {
        throw std::invalid_argument("higher_catalan needs r >= 1");
    }
    return series_pow(series_catalan(n), r)[n].to_integer();
}

HigherCatalanTable::HigherCatalanTable(unsigned long max_r, std::size_t order)
{
    const Series c = series_catalan(order);
    powers_.reserve(max_r + 1);
    powers_.push_back(Series::constant(1, order));
    for (unsigned long r = 1; r <= max_r; ++r) {
        powers_.push_back(powers_.back() * c);
    }
}

Integer HigherCatalanTable::operator()(unsigned long r, unsigned long n) const
{
    if (r >= powers_.size() || n > order()) {
        throw std::out_of_range("higher-order Catalan table lookup (" + std::to_string(r) + ", " +
                                std::to_string(n) + ") outside table");
    }
    return powers_[r][n].to_integer();
}

mpf_class catalan_asymptotic_ratio(unsigned long n)
{
    if (n == 0) {
        throw std::invalid_argument("asymptotic ratio needs n >= 1");
    }
    mpf_class c(0, kDecimalBits);
    c = catalan_closed(n);
    mpf_class nf(n, kDecimalBits);
    mpf_class root(0, kDecimalBits);
    mpf_sqrt(root.get_mpf_t(), nf.get_mpf_t());
    const mpf_class sqrt_pi(kSqrtPi, kDecimalBits);
    mpf_class four_n(0, kDecimalBits);
    four_n = int_pow(4, n);
    mpf_class result(0, kDecimalBits);
    result = c * nf * root * sqrt_pi / four_n;
    return result;
}

}  // namespace catode
