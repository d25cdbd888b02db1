#pragma once

#include "eulersum/bigfloat.hpp"
#include "eulersum/rational.hpp"

/// Arbitrary-precision special functions at integer orders and real
/// arguments. Every function returns a value carrying `prec.working_bits()`
/// bits whose absolute error is below 10^(-prec.target_digits).
namespace eulersum::numerics {

/// Riemann zeta at an integer s >= 2.
BigFloat zeta(int s, const Precision& prec);

/// Hurwitz zeta sum_{k>=0} (k+t)^(-s) for integer s >= 2 and rational 0 < t <= 1.
BigFloat hurwitz_zeta(int s, const Rational& t, const Precision& prec);

/// Polylogarithm Li_q(x) for 0 <= x <= 1 (x = 1 requires q >= 2).
BigFloat polylog(int q, const BigFloat& x, const Precision& prec);

/// Generalized harmonic number H_x^(p) = sum_{k>=1} (k^-p - (k+x)^-p), x >= 0.
BigFloat harmonic(int p, const BigFloat& x, const Precision& prec);

/// Digamma function for x > 0.
BigFloat digamma(const BigFloat& x, const Precision& prec);

BigFloat pi_const(const Precision& prec);
BigFloat euler_gamma(const Precision& prec);
BigFloat catalan(const Precision& prec);
BigFloat sqrt3(const Precision& prec);

/// cot(pi j / n) for 0 < j < n; exactly zero when j/n = 1/2.
BigFloat cot_pi(long j, long n, const Precision& prec);

}  // namespace eulersum::numerics

/// Bit-level entry points shared by the oracle engines. These skip argument
/// validation that the public functions above perform.
namespace eulersum::numerics::detail {

BigFloat zeta_bits(int s, mpfr_prec_t bits);
/// Hurwitz zeta for any real a > 0.
BigFloat hurwitz_bits(int s, const BigFloat& a, mpfr_prec_t bits);
BigFloat digamma_bits(const BigFloat& x, mpfr_prec_t bits);
BigFloat harmonic_bits(int p, const BigFloat& x, mpfr_prec_t bits);
BigFloat pi_bits(mpfr_prec_t bits);
BigFloat euler_gamma_bits(mpfr_prec_t bits);

/// Li_q(x) from both x and 1 - x, so arguments within rounding distance of 1
/// keep full relative accuracy in their complement. Requires 0 <= x <= 1.
BigFloat polylog_bits(int q, const BigFloat& x, const BigFloat& one_minus_x, mpfr_prec_t bits);

/// sum_{k>=m} k^(-s) via Euler-Maclaurin at m with Bernoulli terms up to
/// index `order` (even). Intended for large m.
BigFloat power_tail(int s, const BigFloat& m, int order, mpfr_prec_t bits);
/// sum_{k>=m} ln(k) k^(-s), same scheme.
BigFloat log_power_tail(int s, const BigFloat& m, int order, mpfr_prec_t bits);

}  // namespace eulersum::numerics::detail
