#include <catch_amalgamated.hpp>

#include "eulersum/errors.hpp"
#include "eulersum/numerics.hpp"
#include "eulersum/oracle.hpp"
#include "test_util.hpp"

using namespace eulersum;
using namespace eulersum::oracle;
using testutil::close;
using testutil::ref;

namespace {

const OracleConfig kDefault{};

BigFloat zeta(int s) { return numerics::zeta(s, kDefault.prec); }

}  // namespace

TEST_CASE("configuration checks") {
  OracleConfig cfg;
  CHECK_NOTHROW(cfg.require_valid());
  cfg.direct_terms = 99;
  CHECK_THROWS_AS(cfg.require_valid(), ParameterError);
  cfg = OracleConfig{};
  cfg.tail_order = 7;
  CHECK_THROWS_AS(cfg.require_valid(), ParameterError);
  cfg.tail_order = 18;
  CHECK_THROWS_AS(cfg.require_valid(), ParameterError);
  CHECK(OracleConfig::for_precision(Precision(60)).tail_order == 16);
  CHECK(OracleConfig::for_precision(Precision(40)).tail_order == 8);
}

TEST_CASE("direct summation of A") {
  CHECK(close(sum_A_direct({1, 2, 1}, kDefault), zeta(3) * 2L, 30));
  CHECK(close(sum_A_direct({1, 2, 2}, kDefault), ref("1.65282824184444214242463997207824373730185615"), 30));
  CHECK(close(sum_A_direct({3, 4, 3}, kDefault), ref("0.716802284983065307600945425636667759984554075"), 30));
  CHECK_THROWS_AS(sum_A_direct({1, 1, 1}, kDefault), ParameterError);
}

TEST_CASE("partial sums with tail correction are stable in K") {
  OracleConfig small = kDefault;
  small.direct_terms = 1000;
  for (const EulerSumParams& params : {EulerSumParams{1, 2, 2}, EulerSumParams{2, 3, 3}, EulerSumParams{4, 2, 1}}) {
    CHECK(close(sum_A_direct(params, small), sum_A_direct(params, kDefault), 15));
  }
}

TEST_CASE("tail order robustness") {
  OracleConfig six = kDefault;
  six.tail_order = 6;
  for (const EulerSumParams& params : {EulerSumParams{1, 2, 1}, EulerSumParams{3, 2, 2}, EulerSumParams{2, 5, 4}}) {
    CHECK(close(sum_A_direct(params, six), sum_A_direct(params, kDefault), 35));
    CHECK(close(sum_S_direct(params, six), sum_S_direct(params, kDefault), 35));
  }
}

TEST_CASE("non-convergence is reported") {
  OracleConfig crude = kDefault;
  crude.direct_terms = 100;
  crude.tail_order = 2;
  crude.prec = Precision(60);
  CHECK_THROWS_AS(sum_A_direct({1, 2, 4}, crude), ConvergenceError);
}

TEST_CASE("direct summation of S") {
  CHECK(close(sum_S_direct({1, 2, 1}, kDefault), zeta(3) * 2L, 30));
  CHECK(close(sum_S_direct({2, 3, 1}, kDefault), zeta(2) * zeta(3) * 3L - zeta(5) * 9L / 2L, 30));
  CHECK(close(sum_S_direct({1, 2, 3}, kDefault), ref("3.88459578611851060464118807534801309264190515"), 30));
}

TEST_CASE("alternating summation of B") {
  const BigFloat b122 = sum_B_alternating({1, 2, 2}, kDefault);
  CHECK(close(b122, ref("-0.251597129264098887954591706364702649455834774"), 30));
  CHECK(close(sum_B_alternating({1, 4, 1}, kDefault), ref("-0.562936764918595740171743606108917247284325535"), 30));
  // first partial sum is -H_{1/4}; the limit lies between the first two partial sums
  const Precision& p = kDefault.prec;
  const mpfr_prec_t bits = p.working_bits();
  const BigFloat s1 = -numerics::harmonic(1, BigFloat(0.25, bits), p);
  const BigFloat s2 = s1 + numerics::harmonic(1, BigFloat(0.5, bits), p) / 4L;
  CHECK(s1.sign() < 0);
  CHECK(s1 < b122);
  CHECK(b122 < s2);
}

TEST_CASE("quadrature of T") {
  CHECK(close(quad_T({1, 1, 1}, kDefault), zeta(3) * -2L, 35));
  CHECK(close(quad_T({2, 2, 1}, kDefault), ref("0.421912717582241228700037211799574319996530087"), 35));
  CHECK(close(quad_T({1, 3, 2}, kDefault), ref("-0.704621629310197447771369983344664363795461947"), 35));
  CHECK_THROWS_AS(quad_T({1, 2, 1}, kDefault), ParameterError);
}

TEST_CASE("quadrature of the polylog moment") {
  CHECK(close(quad_lemma1(1, 1, kDefault), BigFloat(1L, 200), 35));
  CHECK(close(quad_lemma1(2, 1, kDefault), zeta(2) - BigFloat(1L, 200), 35));
  CHECK(close(quad_lemma1(2, 2, kDefault), ref("0.447467033424113218236207583323012594609474951"), 35));
  CHECK_THROWS_AS(quad_lemma1(0, 1, kDefault), ParameterError);
}

TEST_CASE("finite differences") {
  CHECK(close(fd_lemma2({1, 1, Rational(1), 1}, kDefault), zeta(2) - BigFloat(2L, 200), 25));
  CHECK(close(fd_lemma2({2, 1, Rational(1), 2}, kDefault), ref("0.803808507330339970912434041324299317004310056"), 25));
  CHECK(close(fd_lemma2({1, 2, Rational(2), 3}, kDefault), ref("-0.497341116530496839312355291682147774752454241"), 25));
  CHECK(close(fd_lemma2({2, 3, Rational(3, 2), 5}, kDefault), ref("3.34412624196216218699193672799936146809356279"), 25));
  CHECK_THROWS_AS(fd_lemma2({1, 1, Rational(0), 1}, kDefault), ParameterError);
}

TEST_CASE("verify") {
  const BigFloat tol = pow10(-20, 200);
  const auto a = verify(Kind::A, {1, 2, 2}, kDefault, tol);
  CHECK(a.passed);
  CHECK(a.oracle_kind == OracleKind::summation);
  CHECK(a.abs_error < a.tolerance);
  const auto t = verify(Kind::T, {1, 1, 1}, kDefault, tol);
  CHECK(t.passed);
  CHECK(t.oracle_kind == OracleKind::quadrature);
  CHECK(verify(Kind::B, {1, 2, 2}, kDefault, tol).oracle_kind == OracleKind::alternating);
  CHECK(verify(Kind::eq3, {0, 2, 3}, kDefault, tol).passed);
  CHECK(verify(Kind::lemma1, {0, 3, 4}, kDefault, tol).passed);
  const auto d = verify_lemma2({2, 2, Rational(3, 2), 5}, kDefault, pow10(-15, 200));
  CHECK(d.passed);
  CHECK(d.oracle_kind == OracleKind::finite_difference);
  CHECK_THROWS_AS(verify(Kind::A, {2, 2, 1}, kDefault, tol), ParameterError);
  // an absurd tolerance must fail rather than pass silently
  CHECK_FALSE(verify(Kind::S, {2, 3, 2}, kDefault, pow10(-80, 400)).passed);
}

TEST_CASE("kind names") {
  for (Kind k : {Kind::S, Kind::T, Kind::A, Kind::B, Kind::eq3, Kind::lemma1}) CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("C"), ParameterError);
  CHECK(oracle_kind_name(OracleKind::finite_difference) == "finite_difference");
}
