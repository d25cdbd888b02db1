#include <catch_amalgamated.hpp>

#include "eulersum/exact.hpp"
#include "eulersum/numerics.hpp"
#include "test_util.hpp"

using namespace eulersum;
using namespace eulersum::numerics;
using testutil::close;
using testutil::ref;

namespace {

// MPFR's own implementations serve as a second, unrelated engine.
BigFloat mpfr_zeta_ref(unsigned long s, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_zeta_ui(r.raw(), s, MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("zeta values") {
  const Precision p30(30);
  const BigFloat pi = pi_const(p30);
  CHECK(close(zeta(2, p30), pi * pi / 6L, 30));
  CHECK(close(zeta(3, Precision(20)), ref("1.2020569031595942854"), 19));
  CHECK(close(zeta(7, Precision(45)), ref("1.00834927738192282683979754984979675959986356"), 45));
  for (int s = 2; s <= 8; ++s) CHECK(close(zeta(s, p30), hurwitz_zeta(s, Rational(1), p30), 30));
  const Precision p60(60);
  for (int s = 2; s <= 40; ++s) CHECK(close(zeta(s, p60), mpfr_zeta_ref(s, 400), 60));
  CHECK_THROWS_AS(zeta(1, p30), std::domain_error);
  CHECK_THROWS_AS(zeta(0, p30), std::domain_error);
}

TEST_CASE("hurwitz zeta values") {
  const Precision p(44);
  CHECK(close(hurwitz_zeta(2, Rational(1, 3), p), ref("10.0955971254270940817920040998925163605189041"), 43));
  CHECK(close(hurwitz_zeta(4, Rational(1, 6), p), ref("1296.601621510582629653403530856005746911609"), 40));
  CHECK(close(hurwitz_zeta(5, Rational(3, 8), p), ref("135.067769247654762659618682615475119351818762"), 42));
  CHECK(close(hurwitz_zeta(13, Rational(2, 7), p), ref("11827271.8163372341898221363034161926151924649"), 37));
  const Precision p30(30);
  const BigFloat pi = pi_const(p30);
  CHECK(close(hurwitz_zeta(2, Rational(1, 2), p30), pi * pi / 2L, 30));
  CHECK(close(hurwitz_zeta(4, Rational(1), p30), pow(pi, 4) / 90L, 30));
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(0), p30), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(-1, 2), p30), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(1, Rational(1, 2), p30), std::domain_error);
}

TEST_CASE("multiplication theorem") {
  const Precision p(40);
  for (int n = 2; n <= 8; ++n) {
    for (int s = 2; s <= 6; ++s) {
      BigFloat sum(p.working_bits());
      for (int j = 1; j <= n; ++j) sum += hurwitz_zeta(s, Rational(j, n), p);
      CHECK(close(sum, pow(BigFloat(static_cast<long>(n), p.working_bits()), s) * zeta(s, p), 38));
    }
  }
}

TEST_CASE("hurwitz zeta at one half") {
  const Precision p(40);
  for (int s = 2; s <= 8; ++s) {
    const BigFloat expected = zeta(s, p) * ((1L << s) - 1);
    CHECK(close(hurwitz_zeta(s, Rational(1, 2), p), expected, 38));
  }
}

TEST_CASE("polylogarithm") {
  const Precision p(44);
  const mpfr_prec_t bits = p.working_bits();
  CHECK(close(polylog(2, BigFloat(1L, bits), p), zeta(2, p), 44));
  CHECK(close(polylog(1, BigFloat(0.5, bits), p), log(BigFloat(2L, bits)), 44));
  CHECK(close(polylog(3, BigFloat(0.5, bits), p), ref("0.537213193608040200940623225594965826670402499"), 44));
  CHECK(close(polylog(2, BigFloat(Rational(9, 10), bits), p), ref("1.29971472300495872517106049419295339905056228"), 44));
  CHECK(close(polylog(4, BigFloat(1L, bits) - pow10(-6, bits), p), ref("1.08232203165445646831719996706543811520252386"), 44));
  CHECK(close(polylog(1, BigFloat(0.75, bits), p), ref("1.38629436111989061883446424291635313615100027"), 44));
  CHECK(polylog(5, BigFloat(0L, bits), p).is_zero());
  CHECK_THROWS_AS(polylog(1, BigFloat(1L, bits), p), std::domain_error);
  CHECK_THROWS_AS(polylog(2, BigFloat(1.5, bits), p), std::domain_error);
}

TEST_CASE("polylogarithm against the direct series") {
  const Precision p(30);
  const mpfr_prec_t bits = p.working_bits();
  for (const Rational& x : {Rational(1, 2), Rational(1, 3), Rational(1, 10)}) {
    for (int q = 1; q <= 5; ++q) {
      const BigFloat xv(x, bits);
      BigFloat power = xv;
      BigFloat sum(bits);
      for (long k = 1; k <= 10000; ++k) {
        sum += power / pow(BigFloat(k, bits), q);
        power *= xv;
      }
      CHECK(close(polylog(q, xv, p), sum, 30));
    }
  }
}

TEST_CASE("dilogarithm against MPFR across the unit interval") {
  const Precision p(50);
  const mpfr_prec_t bits = p.working_bits();
  for (int i = 1; i < 100; ++i) {
    const BigFloat x(Rational(i, 100), bits);
    BigFloat expected(400);
    mpfr_li2(expected.raw(), BigFloat(Rational(i, 100), 400).raw(), MPFR_RNDN);
    CHECK(close(polylog(2, x, p), expected, 50));
  }
}

TEST_CASE("harmonic numbers of real argument") {
  const Precision p(44);
  const mpfr_prec_t bits = p.working_bits();
  CHECK(close(harmonic(1, BigFloat(3L, bits), p), BigFloat(Rational(11, 6), bits), 44));
  const BigFloat pi = pi_const(p);
  CHECK(close(harmonic(2, BigFloat(0.5, bits), p), BigFloat(4L, bits) - pi * pi / 3L, 44));
  for (int q = 1; q <= 5; ++q) CHECK(harmonic(q, BigFloat(0L, bits), p).is_zero());
  CHECK(close(harmonic(3, BigFloat(Rational(5, 7), bits), p), ref("0.906270178261017352962945828570044658238033306"), 44));
  CHECK(close(harmonic(1, BigFloat(2.5, bits), p), ref("1.6803723055467760478322024237503135305156664"), 44));
  for (int q = 1; q <= 4; ++q) {
    for (long m = 1; m <= 20; ++m) {
      CHECK(close(harmonic(q, BigFloat(m, bits), p), BigFloat(harmonic_exact(q, m), bits), 44));
    }
  }
}

TEST_CASE("harmonic at one half against its defining series") {
  // sum_k (1/k^2 - 1/(k+1/2)^2) = sum_k k^-2 - 4 sum_k (2k+1)^-2, summed to 10^4 plus tails
  const Precision p(30);
  const mpfr_prec_t bits = p.working_bits();
  const long K = 10000;
  BigFloat sum(bits);
  for (long k = 1; k <= K; ++k) {
    sum += pow(BigFloat(k, bits), -2) - pow(BigFloat(Rational(2 * k + 1, 2), bits), -2);
  }
  sum += detail::power_tail(2, BigFloat(K + 1, bits), 12, bits);
  sum -= detail::hurwitz_bits(2, BigFloat(Rational(2 * K + 3, 2), bits), bits);
  CHECK(close(harmonic(2, BigFloat(0.5, bits), p), sum, 30));
}

TEST_CASE("digamma") {
  const Precision p(44);
  const mpfr_prec_t bits = p.working_bits();
  const BigFloat gamma = euler_gamma(p);
  CHECK(close(digamma(BigFloat(1L, bits), p), -gamma, 44));
  CHECK(close(digamma(BigFloat(0.5, bits), p), -gamma - log(BigFloat(4L, bits)), 44));
  CHECK(close(digamma(BigFloat(Rational(1, 3), bits), p), ref("-3.1320337800208063229964190742872688541554283"), 43));
  CHECK(close(digamma(BigFloat(10.5, bits), p), ref("2.30300103429768637527259355084976605222629263"), 44));
  for (const Rational& x : {Rational(1, 7), Rational(3, 2), Rational(22, 5), Rational(100)}) {
    const BigFloat xv(x, bits);
    const BigFloat diff = digamma(xv + BigFloat(1L, bits), p) - digamma(xv, p);
    CHECK(close(diff, BigFloat(1L, bits) / xv, 43));
    BigFloat expected(400);
    mpfr_digamma(expected.raw(), BigFloat(x, 400).raw(), MPFR_RNDN);
    CHECK(close(digamma(xv, p), expected, 43));
  }
  CHECK_THROWS_AS(digamma(BigFloat(0L, bits), p), std::domain_error);
}

TEST_CASE("constants") {
  const Precision p(50);
  BigFloat g(400);
  mpfr_const_catalan(g.raw(), MPFR_RNDN);
  CHECK(close(catalan(p), g, 50));
  CHECK(close(catalan(Precision(30)), ref("0.915965594177219015054603514932384110774149374"), 30));
  const Precision p30(30);
  const BigFloat from_hurwitz =
      (hurwitz_zeta(2, Rational(1, 4), p30) - hurwitz_zeta(2, Rational(3, 4), p30)) / 16L;
  CHECK(close(catalan(p30), from_hurwitz, 30));
  BigFloat gamma(400);
  mpfr_const_euler(gamma.raw(), MPFR_RNDN);
  CHECK(close(euler_gamma(p), gamma, 50));
  CHECK(close(sqrt3(p) * sqrt3(p), BigFloat(3L, 400), 49));
}

TEST_CASE("cot at rational multiples of pi") {
  const Precision p(40);
  CHECK(close(cot_pi(1, 4, p), BigFloat(1L, 200), 40));
  CHECK(cot_pi(1, 2, p).is_zero());
  CHECK(cot_pi(3, 6, p).is_zero());
  CHECK(close(cot_pi(1, 3, p), sqrt3(p) / 3L, 40));
  CHECK(close(cot_pi(5, 6, p), -sqrt3(p), 40));
  const BigFloat pi = pi_const(p);
  CHECK(close(cot_pi(2, 7, p), cot(pi * 2L / 7L), 40));
  CHECK_THROWS_AS(cot_pi(0, 4, p), std::domain_error);
  CHECK_THROWS_AS(cot_pi(4, 4, p), std::domain_error);
}

TEST_CASE("power tails equal Hurwitz zeta at the start point") {
  const mpfr_prec_t bits = Precision(40).working_bits();
  for (int s = 2; s <= 9; ++s) {
    // truncation after B_16 at m = 1000 is below 1e-55 for s = 2
    const BigFloat m(1000L, bits);
    CHECK(close(detail::power_tail(s, m, 16, bits), detail::hurwitz_bits(s, m, bits), 45));
  }
}

TEST_CASE("precision monotonicity") {
  const Precision p(30);
  const Precision q = p.extended(10);
  CHECK(close(zeta(5, p), zeta(5, q), 30));
  CHECK(close(hurwitz_zeta(3, Rational(2, 9), p), hurwitz_zeta(3, Rational(2, 9), q), 30));
  CHECK(close(polylog(3, BigFloat(0.9, 300), p), polylog(3, BigFloat(0.9, 300), q), 30));
  CHECK(close(harmonic(1, BigFloat(Rational(7, 3), 300), p), harmonic(1, BigFloat(Rational(7, 3), 300), q), 30));
  CHECK(close(catalan(p), catalan(q), 30));
}
