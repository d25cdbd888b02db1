#include <catch_amalgamated.hpp>

#include "eulersum/closed_forms.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/numerics.hpp"
#include "test_util.hpp"

using namespace eulersum;
using namespace eulersum::closed_forms;
using testutil::close;
using testutil::ref;
using testutil::rel_close;

namespace {

const Precision kPrec(40);

BigFloat value(const ConstExpr& e) { return eval_numeric(e, kPrec); }
BigFloat zeta(int s) { return numerics::zeta(s, kPrec); }

bool has_atom(const ConstExpr& e, AtomKind kind) { return !e.free_of(kind); }

}  // namespace

TEST_CASE("theta") {
  CHECK(theta(1, 2, 4).is_zero());
  CHECK(simplify_special_points(theta(1, 1, 4)) == pi_expr());
  const ConstExpr t = theta(2, 1, 3);
  CHECK(t == hurwitz_expr(2, Rational(1, 3)) + hurwitz_expr(2, Rational(2, 3)));
  CHECK(close(value(t), zeta(2) * 8L, 38));
  CHECK_THROWS_AS(theta(2, 0, 3), ParameterError);
  CHECK_THROWS_AS(theta(2, 3, 3), ParameterError);
  CHECK_THROWS_AS(theta(0, 1, 3), ParameterError);
}

TEST_CASE("S closed form") {
  CHECK(close(value(s_closed({1, 2, 1})), zeta(3) * 2L, 38));
  CHECK(close(value(s_closed({2, 3, 1})), ref("1.26573815274672368610011163539872295998959026"), 38));
  CHECK(close(value(s_closed({2, 3, 1})), zeta(2) * zeta(3) * 3L - zeta(5) * 9L / 2L, 38));
  CHECK(close(value(s_closed({1, 2, 3})), ref("3.88459578611851060464118807534801309264190515"), 38));
  for (int p = 1; p <= 6; ++p) {
    for (int q = 2; q <= 7; ++q) {
      if ((p + q) % 2 == 0) continue;
      const ConstExpr e = s_closed({p, q, 1});
      CHECK_FALSE(has_atom(e, AtomKind::hurwitz));
      CHECK_FALSE(has_atom(e, AtomKind::cot));
    }
  }
  CHECK_THROWS_AS(s_closed({2, 2, 1}), ParameterError);
  CHECK_THROWS_AS(s_closed({2, 1, 1}), ParameterError);
}

TEST_CASE("T closed form") {
  CHECK(close(value(t_closed({1, 1, 1})), zeta(3) * -2L, 38));
  CHECK(close(value(t_closed({2, 2, 1})), ref("0.421912717582241228700037211799574319996530087"), 38));
  CHECK(close(value(t_closed({1, 3, 2})), ref("-0.704621629310197447771369983344664363795461947"), 38));
  CHECK_THROWS_AS(t_closed({1, 2, 1}), ParameterError);
  CHECK_THROWS_AS(t_closed({0, 2, 1}), ParameterError);
}

TEST_CASE("A closed form") {
  CHECK(simplify(a_closed({1, 2, 2}), SimplifyFlags{}) == zeta_const(3) * Rational(11, 8));
  CHECK(close(value(a_closed({1, 2, 1})), zeta(3) * 2L, 38));
  CHECK(close(value(a_closed({1, 2, 2})), ref("1.65282824184444214242463997207824373730185615"), 38));
  CHECK(close(value(a_closed({1, 4, 3})), ref("0.515186101239286783283938915130263317338193883"), 38));
  CHECK(close(value(a_closed({3, 4, 3})), ref("0.716802284983065307600945425636667759984554075"), 38));
  CHECK(close(value(a_closed({2, 3, 2})), ref("0.931449575747809619156356183507140588057948398"), 38));
  CHECK(close(value(a_closed({5, 2, 5})), ref("1.21123597452804219820744341213167594361811683"), 38));
  CHECK_THROWS_AS(a_closed({2, 2, 1}), ParameterError);
  CHECK_THROWS_AS(a_closed({2, 1, 1}), ParameterError);
}

TEST_CASE("A(1, q, n) agrees with the integral route") {
  for (int q = 2; q <= 6; q += 2) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(close(value(a1_via_integral(q, n)), value(a_closed({1, q, n})), 35));
    }
  }
}

TEST_CASE("reference series") {
  CHECK(simplify(eq3_reference(1, 2), SimplifyFlags{}) == zeta_const(3) * Rational(11, 8));
  CHECK(eq3_reference(1, 1) == zeta_const(3) * Rational(2));
  CHECK(close(value(eq3_reference(2, 3)), value(a_closed({1, 4, 3})), 35));
  CHECK_THROWS_AS(eq3_reference(0, 1), ParameterError);
}

TEST_CASE("B closed form") {
  const ConstExpr b = simplify(b_closed({1, 2, 2}), SimplifyFlags::all());
  CHECK(b == pi_expr() * ConstExpr(Atom::catalan()) * Rational(1, 2) - zeta_const(3) * Rational(45, 32));
  CHECK(close(value(b_closed({1, 2, 2})), ref("-0.251597129264098887954591706364702649455834774"), 38));
  CHECK(close(value(b_closed({1, 4, 1})), ref("-0.562936764918595740171743606108917247284325535"), 38));
  CHECK(close(value(b_closed({3, 4, 3})), ref("-0.373214809235383684422194170147677994361060631"), 37));
  CHECK(close(value(b_closed({5, 2, 4})), ref("-0.339277408963772680822301929307977502316671958"), 37));
  for (const EulerSumParams& params : {EulerSumParams{1, 2, 2}, EulerSumParams{3, 4, 3}, EulerSumParams{2, 5, 1}}) {
    const ConstExpr expected = add(scale(a_closed(params), pow(Rational(2), 1 - params.q)),
                                   scale(a_closed({params.p, params.q, 2 * params.n}), Rational(-1)));
    CHECK(b_closed(params) == expected);
  }
  CHECK_THROWS_AS(b_closed({2, 1, 1}), ParameterError);
  CHECK_THROWS_AS(b_closed({1, 1, 1}), ParameterError);
}

TEST_CASE("moment integral of the polylogarithm") {
  CHECK(lemma1_rhs(1, 1) == ConstExpr(Rational(1)));
  CHECK(lemma1_rhs(2, 2) == ConstExpr(Rational(-3, 8)) + zeta_const(2) * Rational(1, 2));
  CHECK(close(value(lemma1_rhs(2, 2)), ref("0.447467033424113218236207583323012594609474951"), 38));
  CHECK(close(value(lemma1_rhs(3, 1)), ref("0.557122836311367848927322994865424801546036391"), 38));
  CHECK(lemma1_rhs(2, 1) == zeta_const(2) - Rational(1));
}

TEST_CASE("n-derivative of H_nk / n^q") {
  const Precision p(40);
  CHECK(close(lemma2_rhs({1, 1, Rational(1), 1}, p), zeta(2) - BigFloat(2L, 200), 38));
  CHECK(rel_close(lemma2_rhs({1, 2, Rational(2), 3}, p), ref("-0.497341116530496839312355291682147774752454241"), 35));
  CHECK(rel_close(lemma2_rhs({2, 1, Rational(1), 2}, p), ref("0.803808507330339970912434041324299317004310056"), 35));
  CHECK(rel_close(lemma2_rhs({2, 3, Rational(3, 2), 5}, p), ref("3.34412624196216218699193672799936146809356279"), 35));
  CHECK_THROWS_AS(lemma2_rhs({1, 1, Rational(0), 1}, p), ParameterError);
  CHECK_THROWS_AS(lemma2_rhs({1, 1, Rational(-1, 2), 1}, p), ParameterError);
}

TEST_CASE("parity gates over the full grid") {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      const EulerSumParams params{p, q, 2};
      if ((p + q) % 2 == 1 && q >= 2) {
        CHECK_NOTHROW(s_closed(params));
        CHECK_THROWS_AS(t_closed(params), ParameterError);
      } else if ((p + q) % 2 == 0) {
        CHECK_THROWS_AS(s_closed(params), ParameterError);
        CHECK_THROWS_AS(a_closed(params), ParameterError);
        CHECK_THROWS_AS(b_closed(params), ParameterError);
        CHECK_NOTHROW(t_closed(params));
      } else {
        CHECK_THROWS_AS(a_closed(params), ParameterError);
      }
    }
  }
}

TEST_CASE("atoms stay in range") {
  for (int p = 1; p <= 5; ++p) {
    for (int q = 2; q <= 6; ++q) {
      if ((p + q) % 2 == 0) continue;
      for (int n = 1; n <= 4; ++n) {
        const ConstExpr b = b_closed({p, q, n});
        for (const auto& term : b.terms()) {
          for (const auto& atom : term.atoms) {
            if (atom.kind() == AtomKind::zeta) CHECK(atom.order() >= 2);
            if (atom.kind() == AtomKind::hurwitz) {
              CHECK(atom.argument() > Rational(0));
              CHECK(atom.argument() < Rational(1));
            }
          }
        }
      }
    }
  }
}
