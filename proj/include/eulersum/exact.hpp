#pragma once

#include "eulersum/rational.hpp"

namespace eulersum {

/// C(n, k) as an exact integer; zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Bernoulli number B_m with the convention B_1 = -1/2.
///
/// Values are computed once and memoized; safe to call from several threads.
const Rational& bernoulli(long m);

/// Exact partial sum H_m^(p) = sum_{k=1}^m k^(-p).
Rational harmonic_exact(long p, long m);

/// Riemann zeta at a non-positive integer, zeta(-m) = (-1)^m B_{m+1}/(m+1).
Rational zeta_nonpositive(long s);

/// Exact rational r with zeta(2j) = r * pi^(2j).
Rational even_zeta_pi_coefficient(long two_j);

}  // namespace eulersum
