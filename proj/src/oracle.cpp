#include "eulersum/oracle.hpp"

#include <cmath>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/exact.hpp"
#include "eulersum/numerics.hpp"
#include "eulersum/quadrature.hpp"

namespace eulersum::oracle {

namespace nd = numerics::detail;

void OracleConfig::require_valid() const {
  if (direct_terms < 100) throw ParameterError("direct_terms must be >= 100");
  if (tail_order < 2 || tail_order > 16 || tail_order % 2 != 0) {
    throw ParameterError("tail_order must be one of 2, 4, ..., 16");
  }
  if (quad_levels < 3) throw ParameterError("quad_levels must be >= 3");
}

OracleConfig OracleConfig::for_precision(const Precision& prec) {
  OracleConfig cfg;
  cfg.prec = prec;
  if (prec.target_digits > 40) cfg.tail_order = 16;
  return cfg;
}

namespace {

void require_convergent(const EulerSumParams& params) {
  if (params.p < 1 || params.n < 1) throw ParameterError("p and n must be >= 1 (got " + params.str() + ")");
  if (params.q < 2) throw ParameterError("q must be >= 2 for convergence (got " + params.str() + ")");
}

// 10^-(target - guard): the accuracy claimed for the summation engines.
BigFloat tail_tolerance(const OracleConfig& cfg, mpfr_prec_t bits) {
  return pow10(-(cfg.prec.target_digits - cfg.prec.guard_digits), bits);
}

// sum_{k>=m} k^-q H_{alpha k}^(p) from the large-x expansion of H_x^(p)
// with Bernoulli terms up to B_order.
BigFloat harmonic_tail(int p, int q, const Rational& alpha, long m, int order, mpfr_prec_t bits) {
  const BigFloat start(m, bits);
  const BigFloat a(alpha, bits);
  auto tail = [&](int s) { return nd::power_tail(s, start, order, bits); };
  BigFloat sum(bits);
  if (p == 1) {
    // H_x ~ ln x + gamma + 1/(2x) - sum_j B_2j / (2j x^2j)
    sum += nd::log_power_tail(q, start, order, bits);
    sum += (log(a) + nd::euler_gamma_bits(bits)) * tail(q);
    sum += tail(q + 1) / (a * 2L);
    for (int j = 1; 2 * j <= order; ++j) {
      sum -= BigFloat(bernoulli(2 * j) / Rational(2 * j), bits) * pow(a, -2 * j) * tail(q + 2 * j);
    }
    return sum;
  }
  // H_x^(p) ~ zeta(p) - x^(1-p)/(p-1) + x^-p/2 - sum_j B_2j (p)_(2j-1)/(2j)! x^(-p-2j+1)
  sum += nd::zeta_bits(p, bits) * tail(q);
  sum -= pow(a, 1 - p) * tail(q + p - 1) / static_cast<long>(p - 1);
  sum += pow(a, -p) * tail(q + p) / 2L;
  Rational coeff(p);  // (p)_(2j-1) / (2j)!
  coeff /= Rational(2);
  for (int j = 1; 2 * j <= order; ++j) {
    if (j > 1) coeff *= Rational((p + 2 * j - 3) * (p + 2 * j - 2), (2 * j - 1) * (2 * j));
    sum -= BigFloat(bernoulli(2 * j) * coeff, bits) * pow(a, -p - 2 * j + 1) * tail(q + p + 2 * j - 1);
  }
  return sum;
}

// Tail at cfg.tail_order, cross-checked against the next lower order
// (order 0 keeps only the integral and boundary terms).
BigFloat checked_tail(int p, int q, const Rational& alpha, long m, const OracleConfig& cfg, mpfr_prec_t bits) {
  BigFloat tail = harmonic_tail(p, q, alpha, m, cfg.tail_order, bits);
  const BigFloat lower = harmonic_tail(p, q, alpha, m, cfg.tail_order - 2, bits);
  const BigFloat diff = abs(tail - lower);
  if (diff > tail_tolerance(cfg, bits)) {
    throw ConvergenceError("summation tail: orders " + std::to_string(cfg.tail_order - 2) + " and " +
                           std::to_string(cfg.tail_order) + " differ by " + to_string(diff, 6));
  }
  return tail;
}

// H_{k/d}^(p) for k = 1..K, advanced one step per k with H_x = H_{x-1} + x^-p.
class RationalHarmonics {
 public:
  RationalHarmonics(int p, long d, mpfr_prec_t bits) : p_(p), d_(d), bits_(bits) {
    for (long r = 1; r <= d; ++r) base_.push_back(nd::harmonic_bits(p, BigFloat(Rational(r, d), bits), bits));
  }

  // Must be called with k = 1, 2, 3, ...
  const BigFloat& next(long k) {
    const long r = (k - 1) % d_;
    if (k > d_) {
      const BigFloat x = BigFloat(k, bits_) / d_;
      base_[r] += pow(x, -p_);
    }
    return base_[r];
  }

 private:
  int p_;
  long d_;
  mpfr_prec_t bits_;
  std::vector<BigFloat> base_;
};

using Integrand = quadrature::Integrand;

BigFloat integrate(const Integrand& f, const OracleConfig& cfg) {
  const mpfr_prec_t bits = cfg.prec.working_bits();
  const BigFloat tol = pow10(-cfg.prec.target_digits, bits);
  return quadrature::tanh_sinh(f, bits, cfg.quad_levels, tol).value;
}

// Weights c_i, i = -m..m, with f^(p)(0) ~ sum c_i f(i) (Fornberg's recursion).
std::vector<Rational> central_weights(int p, int m) {
  const int npts = 2 * m + 1;
  std::vector<Rational> x;
  for (int i = -m; i <= m; ++i) x.emplace_back(i);
  // c[j][k] for derivative k at node j
  std::vector<std::vector<Rational>> c(npts, std::vector<Rational>(p + 1, Rational(0)));
  c[0][0] = Rational(1);
  Rational c1(1);
  for (int i = 1; i < npts; ++i) {
    Rational c2(1);
    const int mn = std::min(i, p);
    for (int j = 0; j < i; ++j) {
      const Rational c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (Rational(k) * c[i - 1][k - 1] - x[i - 1] * c[i - 1][k]) / c2;
        c[i][0] = -c1 * x[i - 1] * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (x[i] * c[j][k] - Rational(k) * c[j][k - 1]) / c3;
      c[j][0] = x[i] * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<Rational> w;
  for (int j = 0; j < npts; ++j) w.push_back(c[j][p]);
  return w;
}

}  // namespace

BigFloat sum_A_direct(const EulerSumParams& params, const OracleConfig& cfg) {
  require_convergent(params);
  cfg.require_valid();
  const mpfr_prec_t bits = cfg.prec.working_bits();
  const long K = cfg.direct_terms;
  RationalHarmonics h(params.p, params.n, bits);
  BigFloat sum(bits);
  for (long k = 1; k <= K; ++k) sum += h.next(k) * pow(BigFloat(k, bits), -params.q);
  return sum + checked_tail(params.p, params.q, Rational(1, params.n), K + 1, cfg, bits);
}

BigFloat sum_S_direct(const EulerSumParams& params, const OracleConfig& cfg) {
  require_convergent(params);
  cfg.require_valid();
  const mpfr_prec_t bits = cfg.prec.working_bits();
  const long K = cfg.direct_terms;
  const long n = params.n;
  BigFloat h(bits);
  BigFloat sum(bits);
  long m = 0;
  for (long k = 1; k <= K; ++k) {
    for (; m < n * k;) {
      ++m;
      h += pow(BigFloat(m, bits), -params.p);
    }
    sum += h * pow(BigFloat(k, bits), -params.q);
  }
  return sum + checked_tail(params.p, params.q, Rational(n), K + 1, cfg, bits);
}

BigFloat sum_B_alternating(const EulerSumParams& params, const OracleConfig& cfg) {
  require_convergent(params);
  cfg.require_valid();
  const mpfr_prec_t bits = cfg.prec.working_bits();
  const long K = cfg.direct_terms;
  const long d = 2L * params.n;

  RationalHarmonics h(params.p, d, bits);
  BigFloat sum(bits);
  for (long k = 1; k <= K; ++k) {
    BigFloat term = h.next(k) * pow(BigFloat(k, bits), -params.q);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }

  // Euler transform of sum_{m>=0} (-1)^m a_m, a_m = H_{(K+1+m)/d} / (K+1+m)^q.
  // High-order differences cancel about log2(2K) bits each, so the tail terms
  // are evaluated at raised precision.
  constexpr int kMaxOrder = 32;
  const mpfr_prec_t ebits =
      bits + static_cast<mpfr_prec_t>(kMaxOrder * (std::ceil(std::log2(static_cast<double>(K))) + 1));
  std::vector<BigFloat> diffs;
  for (int i = 0; i <= kMaxOrder; ++i) {
    const long k = K + 1 + i;
    diffs.push_back(nd::harmonic_bits(params.p, BigFloat(Rational(k, d), ebits), ebits) *
                    pow(BigFloat(k, ebits), -params.q));
  }
  BigFloat tail(ebits);
  bool converged = false;
  for (int order = 0; order <= kMaxOrder; ++order) {
    // diffs[0] now holds the order-th forward difference at m = 0.
    BigFloat term = ldexp(diffs[0], -(order + 1));
    if (order % 2 == 1) term = -term;
    tail += term;
    if (order > 0 && abs(term) < ldexp(max(abs(tail), BigFloat(1L, ebits)), -static_cast<long>(bits) - 8)) {
      converged = true;
      break;
    }
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
    if (diffs.empty()) break;
  }
  if (!converged) throw ConvergenceError("alternating tail: Euler transform did not converge for " + params.str());
  if ((K + 1) % 2 == 1) tail = -tail;
  tail.set_precision(bits);
  return sum + tail;
}

BigFloat quad_T(const EulerSumParams& params, const OracleConfig& cfg) {
  params.require_integral();
  cfg.require_valid();
  const mpfr_prec_t bits = cfg.prec.working_bits();
  const int p = params.p;
  const int q = params.q;
  const long n = params.n;
  const BigFloat half(0.5, bits);
  auto f = [&](const BigFloat& x, const BigFloat& omx) {
    BigFloat lx(bits);
    BigFloat l1(bits);
    if (x <= half) {
      lx = log(x);
      l1 = log1p(-pow(x, n));
    } else {
      lx = log1p(-omx);
      l1 = log(-expm1(lx * n));
    }
    BigFloat v = l1 * nd::polylog_bits(q, x, omx, bits) / x;
    if (p > 1) v *= pow(lx, p - 1);
    return v;
  };
  return integrate(f, cfg);
}

BigFloat quad_lemma1(int q, int n, const OracleConfig& cfg) {
  if (q < 1 || n < 1) throw ParameterError("quad_lemma1: q and n must be >= 1");
  cfg.require_valid();
  const mpfr_prec_t bits = cfg.prec.working_bits();
  auto f = [&](const BigFloat& x, const BigFloat& omx) {
    BigFloat v = nd::polylog_bits(q, x, omx, bits);
    if (n > 1) v *= pow(x, n - 1);
    return v;
  };
  return integrate(f, cfg);
}

BigFloat fd_lemma2(const LemmaDerivativeParams& params, const OracleConfig& cfg) {
  params.require_valid();
  cfg.require_valid();
  const int p = params.p;
  const int m = (p + 1) / 2 + 3;
  const int order = (p % 2 == 1) ? 2 * m + 1 - p : 2 * m + 2 - p;
  constexpr int kLevels = 4;
  // At least 60 digits; each derivative order divides by h ~ 2^-20.
  const mpfr_prec_t bits =
      std::max(cfg.prec.working_bits(), Precision(60).working_bits()) + static_cast<mpfr_prec_t>(20 * p);

  const BigFloat x0(params.n, bits);
  const std::vector<Rational> weights = central_weights(p, m);
  auto f = [&](const BigFloat& x) {
    return nd::harmonic_bits(1, x * static_cast<long>(params.k), bits) / pow(x, params.q);
  };
  auto derivative = [&](const BigFloat& h) {
    BigFloat acc(bits);
    for (int i = -m; i <= m; ++i) {
      const Rational& w = weights[i + m];
      if (w.is_zero()) continue;
      acc += BigFloat(w, bits) * f(x0 + h * static_cast<long>(i));
    }
    return acc / pow(h, p);
  };

  const BigFloat h0 = pow10(-6, bits);
  if (!(x0 - h0 * static_cast<long>(m) > 0L)) throw ParameterError("fd_lemma2: n too close to 0 for the stencil");
  std::vector<std::vector<BigFloat>> table(kLevels);
  for (int i = 0; i < kLevels; ++i) {
    table[i].push_back(derivative(ldexp(h0, -i)));
    for (int j = 1; j <= i; ++j) {
      const long factor = 1L << (order + 2 * (j - 1));
      table[i].push_back(table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1));
    }
  }
  const BigFloat& best = table[kLevels - 1][kLevels - 1];
  const BigFloat& prev = table[kLevels - 2][kLevels - 2];
  const BigFloat stall = abs(best - prev);
  if (stall > pow10(-20, bits) * max(abs(best), BigFloat(1L, bits))) {
    throw ConvergenceError("fd_lemma2: Richardson extrapolation stalled for " + params.str());
  }
  return best;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::S:
      return "S";
    case Kind::T:
      return "T";
    case Kind::A:
      return "A";
    case Kind::B:
      return "B";
    case Kind::eq3:
      return "eq3";
    case Kind::lemma1:
      return "lemma1";
  }
  return {};
}

Kind parse_kind(const std::string& name) {
  for (Kind k : {Kind::S, Kind::T, Kind::A, Kind::B, Kind::eq3, Kind::lemma1}) {
    if (kind_name(k) == name) return k;
  }
  throw ParameterError("unknown kind '" + name + "' (expected S, T, A, B, eq3 or lemma1)");
}

std::string oracle_kind_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::summation:
      return "summation";
    case OracleKind::alternating:
      return "alternating";
    case OracleKind::quadrature:
      return "quadrature";
    case OracleKind::finite_difference:
      return "finite_difference";
  }
  return {};
}

bool valid_for(Kind kind, const EulerSumParams& params) {
  switch (kind) {
    case Kind::S:
    case Kind::A:
    case Kind::B:
      return params.valid_for_sum();
    case Kind::T:
      return params.valid_for_integral();
    case Kind::eq3:
    case Kind::lemma1:
      return params.q >= 1 && params.n >= 1;
  }
  return false;
}

namespace {

VerificationReport finish(VerificationReport r, const BigFloat& tolerance) {
  r.abs_error = abs(r.closed_value - r.oracle_value);
  r.rel_error = r.oracle_value.is_zero() ? r.abs_error : r.abs_error / abs(r.oracle_value);
  r.tolerance = tolerance;
  r.passed = r.abs_error < tolerance;
  return r;
}

}  // namespace

VerificationReport verify(Kind kind, const EulerSumParams& params, const OracleConfig& cfg, const BigFloat& tolerance) {
  VerificationReport r;
  r.kind = kind_name(kind);
  r.params = params;
  const Precision& prec = cfg.prec;
  switch (kind) {
    case Kind::S:
      r.closed_value = eval_numeric(closed_forms::s_closed(params), prec);
      r.oracle_value = sum_S_direct(params, cfg);
      r.oracle_kind = OracleKind::summation;
      break;
    case Kind::A:
      r.closed_value = eval_numeric(closed_forms::a_closed(params), prec);
      r.oracle_value = sum_A_direct(params, cfg);
      r.oracle_kind = OracleKind::summation;
      break;
    case Kind::B:
      r.closed_value = eval_numeric(closed_forms::b_closed(params), prec);
      r.oracle_value = sum_B_alternating(params, cfg);
      r.oracle_kind = OracleKind::alternating;
      break;
    case Kind::T:
      r.closed_value = eval_numeric(closed_forms::t_closed(params), prec);
      r.oracle_value = quad_T(params, cfg);
      r.oracle_kind = OracleKind::quadrature;
      break;
    case Kind::eq3:
      r.params.p = 0;
      r.closed_value = eval_numeric(closed_forms::eq3_reference(params.q, params.n), prec);
      r.oracle_value = sum_A_direct({1, 2 * params.q, params.n}, cfg);
      r.oracle_kind = OracleKind::summation;
      break;
    case Kind::lemma1:
      r.params.p = 0;
      r.closed_value = eval_numeric(closed_forms::lemma1_rhs(params.q, params.n), prec);
      r.oracle_value = quad_lemma1(params.q, params.n, cfg);
      r.oracle_kind = OracleKind::quadrature;
      break;
  }
  if (kind == Kind::eq3 || kind == Kind::lemma1) {
    r.label = r.kind + "(" + std::to_string(params.q) + "," + std::to_string(params.n) + ")";
  } else {
    r.label = r.kind + "(" + std::to_string(params.p) + "," + std::to_string(params.q) + "," +
              std::to_string(params.n) + ")";
  }
  return finish(std::move(r), tolerance);
}

VerificationReport verify_lemma2(const LemmaDerivativeParams& params, const OracleConfig& cfg,
                                 const BigFloat& rel_tolerance) {
  VerificationReport r;
  r.kind = "lemma2";
  r.params = {params.p, params.q, 0};
  r.label = "lemma2(" + params.str() + ")";
  r.closed_value = closed_forms::lemma2_rhs(params, cfg.prec.extended(20));
  r.oracle_value = fd_lemma2(params, cfg);
  r.oracle_kind = OracleKind::finite_difference;
  return finish(std::move(r), rel_tolerance * max(abs(r.oracle_value), BigFloat(0L, rel_tolerance.precision())));
}

}  // namespace eulersum::oracle
