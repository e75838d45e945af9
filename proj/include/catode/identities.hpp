#pragma once

#include <array>
#include <cstddef>

#include "catode/exact_arith.hpp"
#include "catode/report.hpp"

namespace catode {

/// Where the ODE coefficients come from: the row recurrences or the closed forms.
enum class CoeffSource { recurrence, closed_form };

/// C^(N) = sum_{i=1}^{N} a_i(N) (1-4t)^{-(2N-i)/2} C^{i+1}.
/// Series mode compares coefficients up to order K - N and needs K >= N + 8;
/// symbolic mode reduces LHS - RHS to normal form in the quadratic field.
/// Throws DegreeCapExceeded if symbolic intermediates outgrow the cap.
VerificationReport verify_thm1(unsigned long N, Mode mode, std::size_t K = 64,
                               CoeffSource source = CoeffSource::recurrence);

/// C_{n+N} (n+N)_N = sum_i sum_m 4^m binom((2N-i)/2 + m - 1, m) a_i(N) C_{n-m}^{(i+1)}.
VerificationReport verify_thm2(unsigned long n, unsigned long N, CoeffSource source = CoeffSource::recurrence);

/// N! C^{N+1} = sum_{i=0}^{N/2} b_i(N) (1-4t)^{N/2-i} C^{(N-i)}, in the same two modes as thm1.
VerificationReport verify_thm3(unsigned long N, Mode mode, std::size_t K = 64,
                               CoeffSource source = CoeffSource::recurrence);

/// C_k^{(N+1)} N! = sum_i sum_m binom(N/2-i, k-m) (m+N-i)_{N-i} (-4)^{k-m} b_i(N) C_{m+N-i}.
VerificationReport verify_thm4(unsigned long k, unsigned long N, CoeffSource source = CoeffSource::recurrence);

/// sum_{i=0}^{min(N-j, N/2)} a_j(N-i) b_i(N) / N! = delta_{j,N} for every 1 <= j <= N.
VerificationReport verify_inverse_delta(unsigned long N);

/// Explicit sqrt(1+y) coefficients against binomial_general(1/2, n) for n <= K.
VerificationReport verify_sqrt_expansion(std::size_t K);

/// An exact partial sum of a convergent series together with a rigorous
/// bound on the omitted tail and the distance to the closed-form value.
struct ConvergentSum {
    Rational partial_sum;
    Rational bound;
    /// |partial_sum - target| where target is a 60-digit rational enclosure.
    Rational error;
    bool passed = false;
};

/// Slack allowed for rounding of the hard-coded constants.
Rational constant_slack();

/// 60-digit rational approximations of sqrt(2) and ln(2).
Rational sqrt2_approx();
Rational ln2_approx();

/// sum_{n<terms} C_n (-1)^{n-1} / (4^n (2n-1)) against (4 sqrt(2) - 2)/3.
/// The bound is the first omitted term (alternating tail). Needs terms >= 2.
ConvergentSum sum_eq59(unsigned long terms);

/// sum_{n<terms} binom(2n,n) / ((n+1)^2 4^{n+1}) against 1 - ln 2. Needs terms >= 1.
ConvergentSum sum_eq62(unsigned long terms);

VerificationReport verify_eq59(unsigned long terms);
VerificationReport verify_eq62(unsigned long terms);

/// Reports for the two convolution recurrences (index 0: the one equal to
/// 2 at n = 0 and 0 after; index 1: the endpoint-separated form for n >= 2).
std::array<VerificationReport, 2> verify_convolution_recurrences(unsigned long nmax);

/// C_n n^{3/2} sqrt(pi) / 4^n lies strictly inside (0.99, 1.01).
VerificationReport verify_asymptotic(unsigned long n);

}  // namespace catode
