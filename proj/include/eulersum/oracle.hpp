#pragma once

#include <string>

#include "eulersum/bigfloat.hpp"
#include "eulersum/closed_forms.hpp"

/// Brute-force engines that compute the same quantities as the closed forms
/// without sharing any of their algebra.
namespace eulersum::oracle {

struct OracleConfig {
  /// Leading terms summed one by one.
  long direct_terms = 10000;
  /// Bernoulli order of the Euler-Maclaurin tail correction (even, 2..16).
  int tail_order = 8;
  Precision prec{};
  /// Maximum tanh-sinh refinement level.
  int quad_levels = 12;

  void require_valid() const;
  /// Defaults with the tail order raised for targets above 40 digits.
  static OracleConfig for_precision(const Precision& prec);
};

/// sum_{k>=1} H_{k/n}^(p) / k^q.
BigFloat sum_A_direct(const EulerSumParams& params, const OracleConfig& cfg);
/// sum_{k>=1} H_{nk}^(p) / k^q.
BigFloat sum_S_direct(const EulerSumParams& params, const OracleConfig& cfg);
/// sum_{k>=1} (-1)^k H_{k/2n}^(p) / k^q, Euler transform on the tail.
BigFloat sum_B_alternating(const EulerSumParams& params, const OracleConfig& cfg);
/// int_0^1 ln(1 - x^n) ln^(p-1)(x) Li_q(x) / x dx.
BigFloat quad_T(const EulerSumParams& params, const OracleConfig& cfg);
/// int_0^1 x^(n-1) Li_q(x) dx.
BigFloat quad_lemma1(int q, int n, const OracleConfig& cfg);
/// p-th derivative of x -> H_{xk} / x^q at x = n by Richardson-extrapolated
/// central differences.
BigFloat fd_lemma2(const LemmaDerivativeParams& params, const OracleConfig& cfg);

enum class Kind { S, T, A, B, eq3, lemma1 };
enum class OracleKind { summation, alternating, quadrature, finite_difference };

std::string kind_name(Kind kind);
/// Accepts the names printed by `kind_name`; throws ParameterError otherwise.
Kind parse_kind(const std::string& name);
std::string oracle_kind_name(OracleKind kind);

struct VerificationReport {
  std::string kind;
  /// For eq3 and lemma1 only q and n are meaningful (p = 0).
  EulerSumParams params;
  std::string label;
  BigFloat closed_value;
  BigFloat oracle_value;
  BigFloat abs_error;
  BigFloat rel_error;
  BigFloat tolerance;
  bool passed = false;
  OracleKind oracle_kind = OracleKind::summation;
};

/// Parameter check for `kind`; eq3 and lemma1 read only q and n.
bool valid_for(Kind kind, const EulerSumParams& params);

/// Evaluates the closed form of `kind` and its oracle and compares them:
/// passed iff abs_error < tolerance. eq3 is checked against sum_A_direct(1, 2q, n).
VerificationReport verify(Kind kind, const EulerSumParams& params, const OracleConfig& cfg, const BigFloat& tolerance);

/// lemma2_rhs against fd_lemma2 with a relative tolerance; the report stores
/// the equivalent absolute tolerance rel_tolerance * |oracle|.
VerificationReport verify_lemma2(const LemmaDerivativeParams& params, const OracleConfig& cfg,
                                 const BigFloat& rel_tolerance);

}  // namespace eulersum::oracle
