#include "catode/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "catode/algebraic_field.hpp"
#include "catode/catalan.hpp"
#include "catode/coefficients.hpp"
#include "catode/power_series.hpp"

namespace catode {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kSqrt2 = "141421356237309504880168872420969807856967187537694807317668";
constexpr const char* kLn2 = "0693147180559945309417232121458176568075500134360255254120680";
constexpr unsigned long kConstantDigits = 59;

class Stopwatch {
public:
    explicit Stopwatch(VerificationReport& report) : report_(report) {}
    ~Stopwatch() { report_.cost = Clock::now() - start_; }
    Stopwatch(const Stopwatch&) = delete;
    Stopwatch& operator=(const Stopwatch&) = delete;

private:
    VerificationReport& report_;
    Clock::time_point start_ = Clock::now();
};

VerificationReport make_report(IdentityId id, Mode mode, std::map<std::string, long long> params)
{
    VerificationReport r;
    r.id = id;
    r.mode = mode;
    r.parameters = std::move(params);
    r.passed = true;
    return r;
}

void fail(VerificationReport& r, long long index, const std::string& expected, const std::string& actual,
          std::string detail = {})
{
    r.passed = false;
    r.witness = Witness{index, expected, actual, std::move(detail)};
}

CoeffTable coefficient_table(Family family, unsigned long Nmax, CoeffSource source)
{
    return source == CoeffSource::recurrence
               ? (family == Family::a ? a_table_recurrence(Nmax) : b_table_recurrence(Nmax))
               : closed_form_table(family, Nmax);
}

Rational from_decimal_digits(const char* digits, unsigned long scale)
{
    return Rational::make(Integer(digits, 10), int_pow(10, scale));
}

void check_series_mode(unsigned long N, std::size_t K)
{
    if (N < 1) {
        throw std::invalid_argument("N must be at least 1");
    }
    if (K < N + 8) {
        throw std::invalid_argument("series mode needs K >= N + 8");
    }
}

void compare_series(VerificationReport& r, const Series& lhs, const Series& rhs)
{
    if (const auto at = first_mismatch(lhs, rhs)) {
        fail(r, static_cast<long long>(*at), lhs[*at].to_string(), rhs[*at].to_string(), "coefficient of t^k");
    }
}

void compare_symbolic(VerificationReport& r, const AlgebraicElement& lhs, const AlgebraicElement& rhs)
{
    const AlgebraicElement diff = lhs - rhs;
    if (alg_is_zero(diff)) {
        return;
    }
    try {
        const Series ls = alg_to_series(lhs, 16);
        const Series rs = alg_to_series(rhs, 16);
        if (const auto at = first_mismatch(ls, rs)) {
            fail(r, static_cast<long long>(*at), ls[*at].to_string(), rs[*at].to_string(),
                 "nonzero normal form; first differing Taylor coefficient");
            return;
        }
    } catch (const std::domain_error&) {
    }
    fail(r, -1, "0", diff.to_string(), "nonzero normal form of LHS - RHS");
}

}  // namespace

VerificationReport verify_thm1(unsigned long N, Mode mode, std::size_t K, CoeffSource source)
{
    if (mode != Mode::series && mode != Mode::symbolic) {
        throw std::invalid_argument("thm1 runs in series or symbolic mode");
    }
    if (N < 1) {
        throw std::invalid_argument("N must be at least 1");
    }
    std::map<std::string, long long> params{{"N", static_cast<long long>(N)}};
    if (mode == Mode::series) {
        check_series_mode(N, K);
        params["K"] = static_cast<long long>(K);
    }
    VerificationReport r = make_report(IdentityId::thm1, mode, std::move(params));
    Stopwatch watch(r);
    const CoeffTable a = coefficient_table(Family::a, N, source);

    if (mode == Mode::series) {
        const Series c = series_catalan(K);
        const Series lhs = series_derivative(c, N);
        Series rhs(K);
        Series c_power = c;  // C^{i+1}, starting at i = 0
        for (unsigned long i = 1; i <= N; ++i) {
            c_power = c_power * c;
            const Rational alpha = Rational::make(-(2 * static_cast<long>(N) - static_cast<long>(i)), 2);
            rhs = rhs + Rational(a.at(i, N)) * (series_binomial_power(alpha, K) * c_power);
        }
        compare_series(r, lhs, rhs.truncated(K - N));
        return r;
    }

    const AlgebraicElement c = alg_catalan();
    const AlgebraicElement lhs = alg_derivative(c, N);
    AlgebraicElement rhs;
    AlgebraicElement c_power = c;
    for (unsigned long i = 1; i <= N; ++i) {
        c_power = c_power * c;
        rhs = rhs + Rational(a.at(i, N)) * (alg_half_power(-(2 * static_cast<long>(N) - static_cast<long>(i))) * c_power);
    }
    compare_symbolic(r, lhs, rhs);
    return r;
}

VerificationReport verify_thm2(unsigned long n, unsigned long N, CoeffSource source)
{
    if (N < 1) {
        throw std::invalid_argument("N must be at least 1");
    }
    VerificationReport r = make_report(IdentityId::thm2, Mode::exact,
                                       {{"N", static_cast<long long>(N)}, {"n", static_cast<long long>(n)}});
    Stopwatch watch(r);
    const CoeffTable a = coefficient_table(Family::a, N, source);
    const HigherCatalanTable higher(N + 1, n);

    Rational sum = 0;
    for (unsigned long i = 1; i <= N; ++i) {
        const Rational shift = Rational::make(2 * static_cast<long>(N) - static_cast<long>(i), 2) - Rational(1);
        for (unsigned long m = 0; m <= n; ++m) {
            const Rational binom = binomial_general(shift + Rational(static_cast<long>(m)), m);
            sum += Rational(int_pow(4, m)) * binom * Rational(a.at(i, N)) * Rational(higher(i + 1, n - m));
        }
    }
    const Rational value = sum / falling_factorial(Rational(static_cast<long>(n + N)), N);
    const Rational expected(catalan_closed(n + N));
    if (value != expected) {
        fail(r, static_cast<long long>(n + N), expected.to_string(), value.to_string(), "C_{n+N}");
    }
    return r;
}

VerificationReport verify_thm3(unsigned long N, Mode mode, std::size_t K, CoeffSource source)
{
    if (mode != Mode::series && mode != Mode::symbolic) {
        throw std::invalid_argument("thm3 runs in series or symbolic mode");
    }
    if (N < 1) {
        throw std::invalid_argument("N must be at least 1");
    }
    std::map<std::string, long long> params{{"N", static_cast<long long>(N)}};
    if (mode == Mode::series) {
        check_series_mode(N, K);
        params["K"] = static_cast<long long>(K);
    }
    VerificationReport r = make_report(IdentityId::thm3, mode, std::move(params));
    Stopwatch watch(r);
    const CoeffTable b = coefficient_table(Family::b, N, source);
    const Rational n_factorial(factorial(N));
    const unsigned long width = N / 2;

    if (mode == Mode::series) {
        const Series c = series_catalan(K);
        const Series lhs = n_factorial * series_pow(c, N + 1);
        // derivatives[d] = C^{(d)}
        std::vector<Series> derivatives{c};
        for (unsigned long d = 1; d <= N; ++d) {
            derivatives.push_back(series_derivative(derivatives.back()));
        }
        Series rhs(K);
        for (unsigned long i = 0; i <= width; ++i) {
            const Rational alpha = Rational::make(static_cast<long>(N) - 2 * static_cast<long>(i), 2);
            rhs = rhs + Rational(b.at(i, N)) * (series_binomial_power(alpha, K) * derivatives[N - i]);
        }
        compare_series(r, lhs.truncated(K - N), rhs.truncated(K - N));
        return r;
    }

    const AlgebraicElement c = alg_catalan();
    const AlgebraicElement lhs = n_factorial * alg_pow(c, N + 1);
    std::vector<AlgebraicElement> derivatives{c};
    for (unsigned long d = 1; d <= N; ++d) {
        derivatives.push_back(alg_derivative(derivatives.back()));
    }
    AlgebraicElement rhs;
    for (unsigned long i = 0; i <= width; ++i) {
        rhs = rhs + Rational(b.at(i, N)) *
                        (alg_half_power(static_cast<long>(N) - 2 * static_cast<long>(i)) * derivatives[N - i]);
    }
    compare_symbolic(r, lhs, rhs);
    return r;
}

VerificationReport verify_thm4(unsigned long k, unsigned long N, CoeffSource source)
{
    if (N < 1) {
        throw std::invalid_argument("N must be at least 1");
    }
    VerificationReport r = make_report(IdentityId::thm4, Mode::exact,
                                       {{"N", static_cast<long long>(N)}, {"k", static_cast<long long>(k)}});
    Stopwatch watch(r);
    const CoeffTable b = coefficient_table(Family::b, N, source);
    const std::vector<Integer> catalan = catalan_recurrence(k + N);

    Rational sum = 0;
    for (unsigned long i = 0; i <= N / 2; ++i) {
        const Rational upper = Rational::make(static_cast<long>(N) - 2 * static_cast<long>(i), 2);
        for (unsigned long m = 0; m <= k; ++m) {
            const unsigned long order = N - i;
            sum += binomial_general(upper, k - m) * falling_factorial(Rational(static_cast<long>(m + order)), order) *
                   rat_pow(Rational(-4), static_cast<long>(k - m)) * Rational(b.at(i, N)) *
                   Rational(catalan[m + order]);
        }
    }
    const Rational value = sum / Rational(factorial(N));
    const Rational expected(higher_catalan(N + 1, k));
    if (value != expected) {
        fail(r, static_cast<long long>(k), expected.to_string(), value.to_string(), "C_k^(N+1)");
    }
    return r;
}

VerificationReport verify_inverse_delta(unsigned long N)
{
    if (N < 1) {
        throw std::invalid_argument("N must be at least 1");
    }
    VerificationReport r = make_report(IdentityId::eq57, Mode::exact, {{"N", static_cast<long long>(N)}});
    Stopwatch watch(r);
    const CoeffTable a = a_table_recurrence(N);
    const CoeffTable b = b_table_recurrence(N);
    const Rational n_factorial(factorial(N));
    for (unsigned long j = 1; j <= N; ++j) {
        Rational sum = 0;
        const unsigned long upper = std::min(N - j, N / 2);
        for (unsigned long i = 0; i <= upper; ++i) {
            sum += Rational(a.at(j, N - i)) * Rational(b.at(i, N)) / n_factorial;
        }
        const Rational delta = j == N ? 1 : 0;
        if (sum != delta) {
            fail(r, static_cast<long long>(j), delta.to_string(), sum.to_string(), "j");
            break;
        }
    }
    return r;
}

VerificationReport verify_sqrt_expansion(std::size_t K)
{
    VerificationReport r = make_report(IdentityId::eq58, Mode::exact, {{"K", static_cast<long long>(K)}});
    Stopwatch watch(r);
    const Series explicit_form = series_sqrt_one_plus(K);
    const Rational half = Rational::make(1, 2);
    for (std::size_t n = 0; n <= K; ++n) {
        const Rational expected = binomial_general(half, n);
        if (explicit_form[n] != expected) {
            fail(r, static_cast<long long>(n), expected.to_string(), explicit_form[n].to_string(), "coefficient of y^n");
            break;
        }
    }
    return r;
}

Rational constant_slack() { return Rational::make(1, int_pow(10, 25)); }

Rational sqrt2_approx() { return from_decimal_digits(kSqrt2, kConstantDigits); }

Rational ln2_approx() { return from_decimal_digits(kLn2, kConstantDigits + 1); }

namespace {

Rational eq59_term(unsigned long n)
{
    const long sign = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
    const Integer den = int_pow(4, n) * Integer(2 * static_cast<long>(n) - 1);
    return Rational::make(catalan_closed(n) * sign, den);
}

Rational eq62_term(unsigned long n)
{
    const Integer den = Integer(n + 1) * Integer(n + 1) * int_pow(4, n + 1);
    return Rational::make(binomial(2 * n, n), den);
}

}  // namespace

ConvergentSum sum_eq59(unsigned long terms)
{
    if (terms < 2) {
        throw std::invalid_argument("eq59 partial sum needs at least 2 terms");
    }
    ConvergentSum out;
    for (unsigned long n = 0; n < terms; ++n) {
        out.partial_sum += eq59_term(n);
    }
    // From n = 1 on the terms alternate in sign and decrease in magnitude.
    out.bound = eq59_term(terms).abs();
    const Rational target = (Rational(4) * sqrt2_approx() - Rational(2)) / Rational(3);
    out.error = (out.partial_sum - target).abs();
    out.passed = out.error < out.bound + constant_slack();
    return out;
}

ConvergentSum sum_eq62(unsigned long terms)
{
    if (terms < 1) {
        throw std::invalid_argument("eq62 partial sum needs at least 1 term");
    }
    ConvergentSum out;
    for (unsigned long n = 0; n < terms; ++n) {
        out.partial_sum += eq62_term(n);
    }
    // The term ratio tends to 1, so no geometric majorant covers the whole tail.
    // With binom(2n,n)/4^n <= 1/sqrt(pi n), term n <= n^{-5/2} / (4 sqrt(pi)), and
    //   sum_{n>=M} n^{-5/2} <= M^{-5/2} + (2/3) M^{-3/2}.
    // 1/sqrt(pi) < 57/100 and 1/sqrt(M) <= 1/floor(sqrt(M)) give a rational bound.
    const Integer m(terms);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    const Rational inv_m_root = Rational::make(1, m * root);
    const Rational tail_integral = inv_m_root / Rational(m) + Rational::make(2, 3) * inv_m_root;
    out.bound = Rational::make(57, 400) * tail_integral;
    const Rational target = Rational(1) - ln2_approx();
    out.error = (out.partial_sum - target).abs();
    out.passed = out.error < out.bound + constant_slack();
    return out;
}

namespace {

std::string decimal(const Rational& q, int digits = 30)
{
    mpf_class f(0, 256);
    f = q.raw();
    mp_exp_t exp = 0;
    std::string mantissa = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    bool negative = false;
    if (!mantissa.empty() && mantissa.front() == '-') {
        negative = true;
        mantissa.erase(0, 1);
    }
    if (mantissa.empty()) {
        return "0";
    }
    return std::string(negative ? "-" : "") + "0." + mantissa + "e" + std::to_string(exp);
}

VerificationReport convergent_report(IdentityId id, unsigned long terms, const ConvergentSum& s)
{
    VerificationReport r = make_report(id, Mode::numeric, {{"terms", static_cast<long long>(terms)}});
    if (!s.passed) {
        fail(r, static_cast<long long>(terms), "|error| < " + decimal(s.bound), decimal(s.error),
             "distance of partial sum from closed form");
    }
    return r;
}

}  // namespace

VerificationReport verify_eq59(unsigned long terms)
{
    const auto start = Clock::now();
    VerificationReport r = convergent_report(IdentityId::eq59, terms, sum_eq59(terms));
    r.cost = Clock::now() - start;
    return r;
}

VerificationReport verify_eq62(unsigned long terms)
{
    const auto start = Clock::now();
    VerificationReport r = convergent_report(IdentityId::eq62, terms, sum_eq62(terms));
    r.cost = Clock::now() - start;
    return r;
}

std::array<VerificationReport, 2> verify_convolution_recurrences(unsigned long nmax)
{
    if (nmax < 2) {
        throw std::invalid_argument("convolution recurrences need nmax >= 2");
    }
    const auto params = std::map<std::string, long long>{{"nmax", static_cast<long long>(nmax)}};
    VerificationReport r64 = make_report(IdentityId::eq64, Mode::exact, params);
    VerificationReport r66 = make_report(IdentityId::eq66, Mode::exact, params);
    std::vector<Rational> c;
    for (unsigned long n = 0; n <= nmax; ++n) {
        c.emplace_back(catalan_closed(n));
    }
    // (m+1)/(2m-1), including m = 0 where it is -1.
    std::vector<Rational> weight;
    for (unsigned long m = 0; m <= nmax; ++m) {
        weight.push_back(Rational::make(static_cast<long>(m) + 1, 2 * static_cast<long>(m) - 1));
    }
    {
        Stopwatch watch(r64);
        for (unsigned long n = 0; n <= nmax; ++n) {
            Rational value = c[n];
            for (unsigned long m = 0; m <= n; ++m) {
                value -= c[m] * c[n - m] * weight[m];
            }
            const Rational expected = n == 0 ? 2 : 0;
            if (value != expected) {
                fail(r64, static_cast<long long>(n), expected.to_string(), value.to_string(), "n");
                break;
            }
        }
    }
    {
        Stopwatch watch(r66);
        for (unsigned long n = 2; n <= nmax; ++n) {
            Rational sum = 0;
            for (unsigned long m = 1; m < n; ++m) {
                sum += c[m] * c[n - m] * weight[m];
            }
            const Rational value =
                Rational::make(2 * static_cast<long>(n) - 1, 3 * (static_cast<long>(n) - 1)) * sum;
            if (value != c[n]) {
                fail(r66, static_cast<long long>(n), c[n].to_string(), value.to_string(), "C_n");
                break;
            }
        }
    }
    return {r64, r66};
}

VerificationReport verify_asymptotic(unsigned long n)
{
    VerificationReport r = make_report(IdentityId::asymptotic, Mode::numeric, {{"n", static_cast<long long>(n)}});
    Stopwatch watch(r);
    const mpf_class ratio = catalan_asymptotic_ratio(n);
    if (!(ratio > 0.99 && ratio < 1.01)) {
        mp_exp_t exp = 0;
        fail(r, static_cast<long long>(n), "(0.99, 1.01)", "0." + ratio.get_str(exp, 10, 30) + "e" + std::to_string(exp),
             "C_n n^{3/2} sqrt(pi) / 4^n");
    }
    return r;
}

}  // namespace catode
