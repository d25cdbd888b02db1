#include "eulersum/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/exact.hpp"

namespace eulersum::numerics {

namespace {

double bits_to_digits(mpfr_prec_t bits) { return static_cast<double>(bits) * 0.30102999566398120; }

// Guard bits carried through the internal evaluations on top of the caller's
// requested precision.
constexpr mpfr_prec_t kInternalGuard = 32;

BigFloat rational_to(const Rational& r, mpfr_prec_t bits) { return BigFloat(r, bits); }

// |x| < 2^-bits * max(1, |scale|)
bool negligible(const BigFloat& term, const BigFloat& scale, mpfr_prec_t bits) {
  if (term.is_zero()) return true;
  const long scale_exp = scale.is_zero() ? 1 : std::max(1L, scale.exponent2());
  return term.exponent2() < scale_exp - static_cast<long>(bits);
}

// x^(-s) for a positive real x.
BigFloat inv_pow(const BigFloat& x, int s) { return pow(x, -static_cast<long>(s)); }

struct ZetaCache {
  std::mutex mutex;
  std::map<std::pair<int, mpfr_prec_t>, BigFloat> values;
};

ZetaCache& zeta_cache() {
  static ZetaCache cache;
  return cache;
}

// Coefficients c_k = zeta(q-k)/k! (k != q-1) of the expansion of Li_q(e^mu)
// around mu = 0, truncated for |mu| <= ln 2.
struct PolylogSeries {
  std::vector<BigFloat> coeffs;
  BigFloat harmonic_q1;  // H_{q-1}
};

struct PolylogCache {
  std::mutex mutex;
  std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const PolylogSeries>> series;
};

PolylogCache& polylog_cache() {
  static PolylogCache cache;
  return cache;
}

std::shared_ptr<const PolylogSeries> polylog_series(int q, mpfr_prec_t bits) {
  auto& cache = polylog_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.series.find({q, bits});
    if (it != cache.series.end()) return it->second;
  }
  // Terms decay like (|mu| / 2pi)^k once k > q.
  const double ratio = std::log(2.0) / (2.0 * M_PI);
  const long terms = q + static_cast<long>(std::ceil(static_cast<double>(bits + 8) * std::log(2.0) / -std::log(ratio))) + 4;
  auto out = std::make_shared<PolylogSeries>();
  out->coeffs.reserve(static_cast<std::size_t>(terms));
  BigInt fact(1);
  for (long k = 0; k < terms; ++k) {
    if (k > 0) fact *= k;
    const long s = q - k;
    if (s == 1) {
      out->coeffs.emplace_back(0L, bits);
      continue;
    }
    BigFloat z = s >= 2 ? detail::zeta_bits(static_cast<int>(s), bits) : rational_to(zeta_nonpositive(s), bits);
    z /= BigFloat(Rational(fact), bits);
    out->coeffs.push_back(std::move(z));
  }
  out->harmonic_q1 = rational_to(harmonic_exact(1, q - 1), bits);
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.series.emplace(std::make_pair(q, bits), std::move(out));
  return it->second;
}

}  // namespace

namespace detail {

BigFloat pi_bits(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat euler_gamma_bits(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat hurwitz_bits(int s, const BigFloat& a, mpfr_prec_t bits) {
  const mpfr_prec_t wbits = bits + kInternalGuard;
  const double digits = bits_to_digits(wbits);
  // Shift the argument to at least ~0.7 * digits, then apply Euler-Maclaurin.
  const long shift_target = static_cast<long>(std::ceil(0.7 * digits)) + 2;
  const BigFloat aw = a.with_precision(wbits);
  long shift = 0;
  if (aw < shift_target) shift = shift_target - static_cast<long>(std::floor(aw.to_double()));

  BigFloat sum(wbits);
  BigFloat x = aw;
  for (long k = 0; k < shift; ++k) {
    sum += inv_pow(x, s);
    x += BigFloat(1L, wbits);
  }
  // x^(1-s)/(s-1) + x^(-s)/2 + sum_j B_2j/(2j)! (s)_{2j-1} x^(-s-2j+1)
  const BigFloat xs = inv_pow(x, s);
  sum += x * xs / static_cast<long>(s - 1);
  sum += xs / 2L;
  const BigFloat inv_x2 = BigFloat(1L, wbits) / (x * x);
  BigFloat factor = xs * static_cast<long>(s) / x;  // (s)_1 x^(-s-1)
  BigInt two_j_fact(2);
  const long max_j = static_cast<long>(digits) + 8;
  for (long j = 1; j <= max_j; ++j) {
    const BigFloat term = BigFloat(bernoulli(2 * j) / Rational(two_j_fact), wbits) * factor;
    sum += term;
    if (negligible(term, sum, wbits)) break;
    if (j == max_j) throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin series did not settle");
    factor *= inv_x2;
    factor *= static_cast<long>(s + 2 * j - 1) * static_cast<long>(s + 2 * j);
    two_j_fact *= (2 * j + 1) * (2 * j + 2);
  }
  sum.set_precision(bits);
  return sum;
}

BigFloat zeta_bits(int s, mpfr_prec_t bits) {
  auto& cache = zeta_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.values.find({s, bits});
    if (it != cache.values.end()) return it->second;
  }
  BigFloat value = hurwitz_bits(s, BigFloat(1L, bits), bits);
  std::lock_guard lock(cache.mutex);
  cache.values.emplace(std::make_pair(s, bits), value);
  return value;
}

BigFloat digamma_bits(const BigFloat& x, mpfr_prec_t bits) {
  const mpfr_prec_t wbits = bits + kInternalGuard;
  const double digits = bits_to_digits(wbits);
  const long threshold = static_cast<long>(std::ceil(0.5 * digits)) + 10;
  BigFloat y = x.with_precision(wbits);
  BigFloat acc(wbits);
  // psi(x) = psi(x + m) - sum_{i<m} 1/(x+i)
  if (y < threshold) {
    const long shift = threshold - static_cast<long>(std::floor(y.to_double()));
    for (long i = 0; i < shift; ++i) {
      acc -= BigFloat(1L, wbits) / y;
      y += BigFloat(1L, wbits);
    }
  }
  // psi(y) ~ ln y - 1/(2y) - sum_j B_2j / (2j y^2j)
  acc += log(y);
  acc -= BigFloat(1L, wbits) / (y * 2L);
  const BigFloat inv_y2 = BigFloat(1L, wbits) / (y * y);
  BigFloat power = inv_y2;
  const long max_j = static_cast<long>(digits) + 8;
  for (long j = 1; j <= max_j; ++j) {
    const BigFloat term = BigFloat(bernoulli(2 * j) / Rational(2 * j), wbits) * power;
    acc -= term;
    if (negligible(term, acc, wbits)) break;
    power *= inv_y2;
  }
  acc.set_precision(bits);
  return acc;
}

BigFloat harmonic_bits(int p, const BigFloat& x, mpfr_prec_t bits) {
  if (x.is_zero()) return BigFloat(bits);
  const BigFloat x1 = x.with_precision(bits + kInternalGuard) + BigFloat(1L, bits + kInternalGuard);
  if (p == 1) {
    BigFloat r = digamma_bits(x1, bits + kInternalGuard) + euler_gamma_bits(bits + kInternalGuard);
    r.set_precision(bits);
    return r;
  }
  BigFloat r = zeta_bits(p, bits + kInternalGuard) - hurwitz_bits(p, x1, bits + kInternalGuard);
  r.set_precision(bits);
  return r;
}

BigFloat polylog_bits(int q, const BigFloat& x, const BigFloat& one_minus_x, mpfr_prec_t bits) {
  if (x.is_zero()) return BigFloat(bits);
  const mpfr_prec_t wbits = bits + kInternalGuard;
  if (q == 1) {
    BigFloat r = -log(one_minus_x.with_precision(wbits));
    r.set_precision(bits);
    return r;
  }
  if (one_minus_x.is_zero()) return zeta_bits(q, bits);

  BigFloat result(wbits);
  if (x <= BigFloat(0.5, wbits)) {
    // Direct series; the tail after term k is below term_k * x / (1 - x) <= term_k.
    const BigFloat xw = x.with_precision(wbits);
    BigFloat power = xw;
    for (long k = 1;; ++k) {
      BigFloat term = power;
      for (int i = 0; i < q; ++i) mpfr_div_ui(term.raw(), term.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
      result += term;
      if (negligible(term, result, wbits + 2)) break;
      power *= xw;
    }
  } else {
    // Li_q(e^mu) = sum_{k != q-1} zeta(q-k) mu^k/k! + mu^(q-1)/(q-1)! (H_{q-1} - ln(-mu))
    const auto series = polylog_series(q, wbits);
    const BigFloat mu = log1p(-one_minus_x.with_precision(wbits));
    const auto& c = series->coeffs;
    BigFloat horner(wbits);
    for (std::size_t k = c.size(); k-- > 0;) {
      horner *= mu;
      horner += c[k];
    }
    BigFloat log_term = series->harmonic_q1 - log(-mu);
    log_term *= pow(mu, q - 1);
    log_term /= BigFloat(Rational(factorial(q - 1)), wbits);
    result = horner + log_term;
  }
  result.set_precision(bits);
  return result;
}

BigFloat power_tail(int s, const BigFloat& m, int order, mpfr_prec_t bits) {
  const BigFloat mw = m.with_precision(bits);
  const BigFloat ms = inv_pow(mw, s);
  BigFloat sum = mw * ms / static_cast<long>(s - 1);
  sum += ms / 2L;
  const BigFloat inv_m2 = BigFloat(1L, bits) / (mw * mw);
  BigFloat factor = ms * static_cast<long>(s) / mw;
  BigInt two_j_fact(2);
  for (long j = 1; 2 * j <= order; ++j) {
    sum += BigFloat(bernoulli(2 * j) / Rational(two_j_fact), bits) * factor;
    factor *= inv_m2;
    factor *= static_cast<long>(s + 2 * j - 1) * static_cast<long>(s + 2 * j);
    two_j_fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

BigFloat log_power_tail(int s, const BigFloat& m, int order, mpfr_prec_t bits) {
  // g(x) = ln(x) x^-s;  g^(r)(x) = (-1)^r (s)_r x^(-s-r) (ln x - sum_{i<r} 1/(s+i))
  const BigFloat mw = m.with_precision(bits);
  const BigFloat lm = log(mw);
  const BigFloat ms = inv_pow(mw, s);
  const long s1 = s - 1;
  BigFloat sum = mw * ms * (lm / s1 + BigFloat(1L, bits) / (s1 * s1));
  sum += lm * ms / 2L;
  BigFloat h(bits);        // sum_{i<r} 1/(s+i) for r = 2j-1
  BigFloat rising(1L, bits);  // (s)_r
  BigInt two_j_fact(2);
  for (long j = 1; 2 * j <= order; ++j) {
    const long r = 2 * j - 1;
    // advance h and rising from r-2 (or 0) to r
    for (long i = (j == 1 ? 0 : r - 2); i < r; ++i) {
      h += BigFloat(1L, bits) / (s + i);
      rising *= (s + i);
    }
    BigFloat term = BigFloat(bernoulli(2 * j) / Rational(two_j_fact), bits) * rising * pow(mw, -(s + r));
    term *= (lm - h);
    sum += term;
    two_j_fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

}  // namespace detail

BigFloat zeta(int s, const Precision& prec) {
  if (s < 2) throw std::domain_error("zeta: s must be >= 2 (got " + std::to_string(s) + ")");
  return detail::zeta_bits(s, prec.working_bits());
}

BigFloat hurwitz_zeta(int s, const Rational& t, const Precision& prec) {
  if (s < 2) throw std::domain_error("hurwitz_zeta: s must be >= 2 (got " + std::to_string(s) + ")");
  if (t.sign() <= 0 || t > Rational(1)) throw std::domain_error("hurwitz_zeta: t must lie in (0, 1] (got " + t.str() + ")");
  if (t == Rational(1)) return detail::zeta_bits(s, prec.working_bits());
  const mpfr_prec_t bits = prec.working_bits();
  return detail::hurwitz_bits(s, BigFloat(t, bits + kInternalGuard), bits);
}

BigFloat polylog(int q, const BigFloat& x, const Precision& prec) {
  if (q < 1) throw std::domain_error("polylog: q must be >= 1");
  if (x.sign() < 0 || x > 1L) throw std::domain_error("polylog: x must lie in [0, 1]");
  if (q == 1 && x == 1L) throw std::domain_error("polylog: Li_1 diverges at x = 1");
  BigFloat one_minus_x(std::max(prec.working_bits(), x.precision()) + 2);
  mpfr_ui_sub(one_minus_x.raw(), 1, x.raw(), MPFR_RNDN);
  return detail::polylog_bits(q, x, one_minus_x, prec.working_bits());
}

BigFloat harmonic(int p, const BigFloat& x, const Precision& prec) {
  if (p < 1) throw std::domain_error("harmonic: p must be >= 1");
  if (x.sign() < 0) throw std::domain_error("harmonic: x must be >= 0");
  return detail::harmonic_bits(p, x, prec.working_bits());
}

BigFloat digamma(const BigFloat& x, const Precision& prec) {
  if (x.sign() <= 0) throw std::domain_error("digamma: x must be > 0");
  return detail::digamma_bits(x, prec.working_bits());
}

BigFloat pi_const(const Precision& prec) { return detail::pi_bits(prec.working_bits()); }

BigFloat euler_gamma(const Precision& prec) { return detail::euler_gamma_bits(prec.working_bits()); }

BigFloat sqrt3(const Precision& prec) { return sqrt(BigFloat(3L, prec.working_bits())); }

BigFloat catalan(const Precision& prec) {
  // G = sum_{k>=0} (-1)^k / (2k+1)^2, accelerated with the Cohen-Villegas-Zagier
  // scheme; a_k = 1/(2k+1)^2 are moments of a positive weight on [0, 1].
  const mpfr_prec_t bits = prec.working_bits();
  const mpfr_prec_t wbits = bits + kInternalGuard;
  const long n = static_cast<long>(std::ceil(static_cast<double>(wbits) * std::log(2.0) / std::log(3.0 + std::sqrt(8.0)))) + 2;
  BigFloat d = pow(BigFloat(3L, wbits) + sqrt(BigFloat(8L, wbits)), n);
  d = (d + BigFloat(1L, wbits) / d) / 2L;
  BigFloat b(-1L, wbits);
  BigFloat c = -d;
  BigFloat s(wbits);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c / ((2 * k + 1) * (2 * k + 1));
    b *= 2 * (k + n) * (k - n);
    b /= (2 * k + 1) * (k + 1);
  }
  s /= d;
  s.set_precision(bits);
  return s;
}

BigFloat cot_pi(long j, long n, const Precision& prec) {
  if (n < 2 || j <= 0 || j >= n) {
    throw std::domain_error("cot_pi: need 0 < j < n (got j=" + std::to_string(j) + ", n=" + std::to_string(n) + ")");
  }
  const mpfr_prec_t bits = prec.working_bits();
  if (2 * j == n) return BigFloat(bits);
  BigFloat arg = detail::pi_bits(bits + kInternalGuard) * j / n;
  BigFloat r = cot(arg);
  r.set_precision(bits);
  return r;
}

}  // namespace eulersum::numerics
