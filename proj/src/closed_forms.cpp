#include "eulersum/closed_forms.hpp"

#include <sstream>

#include "eulersum/errors.hpp"
#include "eulersum/exact.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum {

bool EulerSumParams::valid_for_sum() const { return p >= 1 && n >= 1 && q >= 2 && (p + q) % 2 == 1; }

bool EulerSumParams::valid_for_integral() const { return p >= 1 && q >= 1 && n >= 1 && (p + q) % 2 == 0; }

void EulerSumParams::require_sum() const {
  if (p < 1 || n < 1) throw ParameterError("p and n must be >= 1 (got " + str() + ")");
  if (q == 1) throw ParameterError("q must not be 1: the series has no closed form there (got " + str() + ")");
  if (q < 2) throw ParameterError("q must be >= 2 (got " + str() + ")");
  if ((p + q) % 2 == 0) throw ParameterError("p+q must be odd (got " + str() + ")");
}

void EulerSumParams::require_integral() const {
  if (p < 1 || q < 1 || n < 1) throw ParameterError("p, q and n must be >= 1 (got " + str() + ")");
  if ((p + q) % 2 != 0) throw ParameterError("p+q must be even (got " + str() + ")");
}

std::string EulerSumParams::str() const {
  std::ostringstream os;
  os << "p=" << p << ", q=" << q << ", n=" << n;
  return os.str();
}

void LemmaDerivativeParams::require_valid() const {
  if (n.sign() <= 0) throw ParameterError("n must be > 0 (got " + str() + ")");
  if (p < 1 || q < 1 || k < 1) throw ParameterError("p, q and k must be >= 1 (got " + str() + ")");
}

std::string LemmaDerivativeParams::str() const {
  std::ostringstream os;
  os << "p=" << p << ", q=" << q << ", n=" << n << ", k=" << k;
  return os.str();
}

namespace closed_forms {

namespace {

Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational int_pow(long base, long e) { return pow(Rational(base), e); }

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

Rational fact(long n) { return Rational(factorial(n)); }

ConstExpr zeta_product(int a, int b) { return zeta_const(a) * zeta_const(b); }

}  // namespace

ConstExpr theta(int k, int j, int n) {
  if (k < 1) throw ParameterError("theta: k must be >= 1");
  if (n < 2 || j < 1 || j > n - 1) {
    throw ParameterError("theta: need 1 <= j <= n-1 (got j=" + std::to_string(j) + ", n=" + std::to_string(n) + ")");
  }
  if (k == 1) return pi_expr() * cot_expr(j, n);
  return hurwitz_expr(k, Rational(j, n)) + hurwitz_expr(k, Rational(n - j, n)) * sign_pow(k);
}

ConstExpr s_closed(const EulerSumParams& params) {
  params.require_sum();
  const int p = params.p;
  const int q = params.q;
  const int n = params.n;
  const int w = p + q;

  ConstExpr result = zeta_const(w) * (Rational(1, 2) / int_pow(n, p));

  ConstExpr even_q;
  for (int j = 0; j <= (q - 1) / 2; ++j) {
    even_q += zeta_product(2 * j, w - 2 * j) * (binom(w - 2 * j - 1, p - 1) / int_pow(n, 2 * j));
  }
  result -= even_q * (sign_pow(q) * int_pow(n, q));

  ConstExpr even_p;
  for (int j = 0; j <= p / 2; ++j) {
    even_p += zeta_product(2 * j, w - 2 * j) * binom(w - 2 * j - 1, q - 1);
  }
  result += even_p * (sign_pow(p) / int_pow(n, p));

  ConstExpr hurwitz_part;
  for (int j = 1; j <= n - 1; ++j) {
    for (int k = 1; k <= p; ++k) {
      hurwitz_part += theta(k, j, n) * hurwitz_expr(w - k, Rational(n - j, n)) * (binom(w - k - 1, q - 1) * sign_pow(k));
    }
  }
  result += hurwitz_part * (sign_pow(p) / (Rational(2) * int_pow(n, p)));
  return result;
}

ConstExpr t_closed(const EulerSumParams& params) {
  params.require_integral();
  const int p = params.p;
  const int q = params.q;
  const int n = params.n;
  const int w = p + q;
  const Rational lead = fact(p - 1) / int_pow(n, w - 1);

  ConstExpr result = s_closed({1, w, n}) * (-lead * binom(w - 2, p - 1));

  for (int r = 1; r <= p - 1; ++r) {
    const ConstExpr bracket = s_closed({r + 1, w - r, n}) - zeta_product(r + 1, w - r);
    result -= bracket * (lead * int_pow(n, r) * binom(w - r - 2, p - r - 1));
  }

  ConstExpr tail;
  for (int j = 1; j <= q - 1; ++j) {
    tail += zeta_product(q - j + 1, p + j) * (sign_pow(j) / int_pow(n, j) * binom(j + p - 2, j - 1));
  }
  result += tail * (sign_pow(p - 1) * fact(p - 1) / int_pow(n, p - 1));
  return result;
}

ConstExpr eq3_reference(int q, int n) {
  if (q < 1 || n < 1) throw ParameterError("eq3_reference: q and n must be >= 1");
  const Rational n2q = int_pow(n, 2 * q);
  ConstExpr result = zeta_const(2 * q + 1) * ((int_pow(n, 2 * q + 1) + Rational(2 * q + 1)) / (Rational(2) * n2q));
  for (int j = 1; j <= q - 1; ++j) {
    result -= zeta_product(2 * j, 2 * q + 1 - 2 * j) * (int_pow(n, 2 * j) / n2q);
  }
  ConstExpr cot_part;
  for (int j = 1; j <= n - 1; ++j) {
    cot_part += cot_expr(j, n) * hurwitz_expr(2 * q, Rational(n - j, n));
  }
  result += pi_expr() * cot_part * (Rational(1) / (Rational(2) * n2q));
  return result;
}

ConstExpr a_closed(const EulerSumParams& params) {
  params.require_sum();
  const int p = params.p;
  const int q = params.q;
  const int n = params.n;
  // p + q odd with p = 1 forces q even.
  if (p == 1) return eq3_reference(q / 2, n);
  const ConstExpr bracket = t_closed({p, q - 1, n}) + t_closed({p - 1, q, n}) * Rational(p - 1);
  return zeta_product(p, q) - bracket * (int_pow(-n, p - 1) / fact(p - 1));
}

ConstExpr a1_via_integral(int q, int n) {
  EulerSumParams{1, q, n}.require_sum();
  return -t_closed({1, q - 1, n});
}

ConstExpr b_closed(const EulerSumParams& params) {
  params.require_sum();
  return a_closed(params) * pow(Rational(2), 1 - params.q) - a_closed({params.p, params.q, 2 * params.n});
}

ConstExpr lemma1_rhs(int q, int n) {
  if (q < 1 || n < 1) throw ParameterError("lemma1_rhs: q and n must be >= 1");
  ConstExpr result(sign_pow(q + 1) * harmonic_exact(1, n) / int_pow(n, q));
  for (int j = 1; j <= q - 1; ++j) {
    result -= zeta_const(q - j + 1) * (sign_pow(j) / int_pow(n, j));
  }
  return result;
}

BigFloat lemma2_rhs(const LemmaDerivativeParams& params, const Precision& prec) {
  params.require_valid();
  const int p = params.p;
  const int q = params.q;
  const mpfr_prec_t bits = prec.working_bits();
  const BigFloat n(params.n, bits);
  const BigFloat nk = n * static_cast<long>(params.k);

  BigFloat prefactor = BigFloat(Rational(factorial(p)) * sign_pow(p), bits) / pow(n, p + q);
  BigFloat sum = BigFloat(binom(p + q - 1, p), bits) * numerics::detail::harmonic_bits(1, nk, bits);
  BigFloat nk_power(1L, bits);
  for (int r = 1; r <= p; ++r) {
    nk_power *= nk;
    const BigFloat diff =
        numerics::detail::harmonic_bits(r + 1, nk, bits) - numerics::detail::zeta_bits(r + 1, bits);
    sum += BigFloat(binom(p + q - r - 1, p - r), bits) * nk_power * diff;
  }
  return prefactor * sum;
}

}  // namespace closed_forms
}  // namespace eulersum
