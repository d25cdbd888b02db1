#pragma once

#include <string>

#include "eulersum/bigfloat.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/symbolic.hpp"

namespace eulersum {

/// The triple (p, q, n): harmonic order p, outer exponent q, argument
/// denominator (or power of x) n.
struct EulerSumParams {
  int p = 1;
  int q = 2;
  int n = 1;

  /// Domain of S, A and B: p, n >= 1, q >= 2 and p + q odd.
  bool valid_for_sum() const;
  /// Domain of T: p, q, n >= 1 and p + q even.
  bool valid_for_integral() const;
  /// Throw ParameterError with a readable reason when invalid.
  void require_sum() const;
  void require_integral() const;

  std::string str() const;
  friend bool operator==(const EulerSumParams&, const EulerSumParams&) = default;
};

/// Parameters of the n-derivative identity; n is a positive real given
/// as a rational so non-integer evaluation points are exact.
struct LemmaDerivativeParams {
  int p = 1;
  int q = 1;
  Rational n{1};
  int k = 1;

  void require_valid() const;
  std::string str() const;
};

namespace closed_forms {

/// Theta(k, j, n) = zeta(k, j/n) + (-1)^k zeta(k, (n-j)/n), and pi cot(pi j/n)
/// for k = 1. Returned raw: no special-point substitution.
ConstExpr theta(int k, int j, int n);

/// S(p, q, n) = sum_{k>=1} H_{nk}^(p) / k^q for odd p + q, q >= 2.
ConstExpr s_closed(const EulerSumParams& params);

/// T(p, q, n) = int_0^1 ln(1 - x^n) ln^(p-1)(x) Li_q(x) / x dx for even p + q.
ConstExpr t_closed(const EulerSumParams& params);

/// A(p, q, n) = sum_{k>=1} H_{k/n}^(p) / k^q for odd p + q, q >= 2.
/// The p = 1 case is the classical formula (`eq3_reference`).
ConstExpr a_closed(const EulerSumParams& params);

/// B(p, q, n) = sum_{k>=1} (-1)^k H_{k/2n}^(p) / k^q = 2^(1-q) A(p,q,n) - A(p,q,2n).
ConstExpr b_closed(const EulerSumParams& params);

/// Classical closed form of sum_k H_{k/n} / k^(2q).
ConstExpr eq3_reference(int q, int n);

/// A(1, q, n) = -T(1, q-1, n), the p = 1 instance of the integral
/// representation after integration by parts (the boundary term vanishes).
/// Independent of `eq3_reference`; used to cross-check it.
ConstExpr a1_via_integral(int q, int n);

/// int_0^1 x^(n-1) Li_q(x) dx.
ConstExpr lemma1_rhs(int q, int n);

/// Closed form of the p-th n-derivative of H_{nk} / n^q, evaluated numerically.
BigFloat lemma2_rhs(const LemmaDerivativeParams& params, const Precision& prec);

}  // namespace closed_forms
}  // namespace eulersum
