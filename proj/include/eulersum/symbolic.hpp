#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

/// Kinds of transcendental (or surd) constants an expression may contain.
/// Declaration order is the canonical atom order.
enum class AtomKind : std::uint8_t { pi, catalan, sqrt3, zeta, hurwitz, cot };

/// One basis constant: pi^m, G, sqrt(3), zeta(s), zeta(s, j/n) or cot(pi j/n).
///
/// Factories validate and normalize their arguments: Hurwitz arguments must lie
/// strictly inside (0, 1) and cot arguments are reduced to lowest terms and may
/// not equal 1/2. Use the expression-level helpers (`hurwitz_expr`, `cot_expr`)
/// when the argument may hit those boundary values.
class Atom {
 public:
  static Atom pi(int power = 1);
  static Atom catalan();
  static Atom sqrt3();
  static Atom zeta(int s);
  static Atom hurwitz(int s, const Rational& t);
  static Atom cot(long j, long n);

  AtomKind kind() const { return kind_; }
  /// Power for pi, s for zeta / Hurwitz, unused otherwise.
  int order() const { return order_; }
  /// Hurwitz argument t = num/den or cot argument j/n.
  long num() const { return num_; }
  long den() const { return den_; }
  Rational argument() const { return Rational(num_, den_); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  Atom(AtomKind kind, int order, long num, long den) : kind_(kind), order_(order), num_(num), den_(den) {}

  AtomKind kind_;
  int order_;
  long num_;
  long den_;
};

/// coeff * product(atoms). In canonical form atoms are sorted, pi appears at
/// most once and sqrt(3) at most once.
struct Term {
  Rational coeff;
  std::vector<Atom> atoms;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite rational-linear combination of atom products, kept canonical:
/// no zero coefficients, no two terms with the same atom multiset, terms
/// ordered by their atom lists. The empty expression is exact zero.
class ConstExpr {
 public:
  ConstExpr() = default;
  ConstExpr(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ConstExpr(const Atom& atom);          // NOLINT(google-explicit-constructor)

  /// Canonicalizes arbitrary (possibly unmerged, unsorted) terms.
  static ConstExpr from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True when no term contains an atom of `kind`.
  bool free_of(AtomKind kind) const;

  ConstExpr& operator+=(const ConstExpr& rhs);
  ConstExpr& operator-=(const ConstExpr& rhs);
  ConstExpr& operator*=(const ConstExpr& rhs);
  ConstExpr& operator*=(const Rational& rhs);
  ConstExpr operator-() const;

  friend ConstExpr operator+(ConstExpr a, const ConstExpr& b) { return a += b; }
  friend ConstExpr operator-(ConstExpr a, const ConstExpr& b) { return a -= b; }
  friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator*(ConstExpr a, const Rational& c) { return a *= c; }
  friend ConstExpr operator*(const Rational& c, ConstExpr a) { return a *= c; }

  friend bool operator==(const ConstExpr&, const ConstExpr&) = default;

 private:
  std::vector<Term> terms_;
};

ConstExpr add(const ConstExpr& a, const ConstExpr& b);
ConstExpr scale(const ConstExpr& a, const Rational& c);
ConstExpr mul(const ConstExpr& a, const ConstExpr& b);
/// Re-canonicalizes `e` from its raw terms.
ConstExpr canonical(const ConstExpr& e);

/// zeta(s) for s = 0 (the rational -1/2) or s >= 2.
ConstExpr zeta_const(int s);
/// zeta(s, t) for 0 < t <= 1; t = 1 yields the zeta(s) atom.
ConstExpr hurwitz_expr(int s, const Rational& t);
/// cot(pi j / n) for 0 < j < n; zero when j/n = 1/2.
ConstExpr cot_expr(long j, long n);
ConstExpr pi_expr(int power = 1);

/// Replaces every atom for which `rule` returns a value, keeping the others.
ConstExpr substitute(const ConstExpr& e, const std::function<std::optional<ConstExpr>(const Atom&)>& rule);

/// zeta(2j) -> r * pi^(2j) with exact Bernoulli-number coefficients.
ConstExpr simplify_even_zeta(const ConstExpr& e);

/// Rewrites atoms at special arguments into a reduced basis:
///  - zeta(s, 1/2) -> (2^s - 1) zeta(s);
///  - zeta(s, t) with t > 1/2 through the reflection formula
///    zeta(s, t) + (-1)^s zeta(s, 1-t) = pi^s Q_{s-1}(cot(pi t))/(s-1)!;
///  - cot(pi t) with t > 1/2 -> -cot(pi (1-t));
///  - cot(pi/4) = 1, cot(pi/3) = sqrt(3)/3, cot(pi/6) = sqrt(3);
///  - with `catalan`, zeta(2, 1/4) -> pi^2 + 8G and zeta(2, 3/4) -> pi^2 - 8G.
ConstExpr simplify_special_points(const ConstExpr& e, bool catalan = false);

struct SimplifyFlags {
  bool even_zeta = true;
  bool special_points = true;
  bool catalan = false;

  static SimplifyFlags none() { return {false, false, false}; }
  static SimplifyFlags all() { return {true, true, true}; }
};

ConstExpr simplify(const ConstExpr& e, const SimplifyFlags& flags);

/// Theta_s(t) = zeta(s, t) + (-1)^s zeta(s, 1-t) written as pi^s times a
/// polynomial in cot(pi t); special cot values are substituted.
ConstExpr reflection_polynomial(int s, const Rational& t);

/// Numeric value of `e`; each atom is evaluated once at the working precision.
BigFloat eval_numeric(const ConstExpr& e, const Precision& prec);

enum class Format { plain, latex, json };

std::string render(const ConstExpr& e, Format format);
std::string render(const Atom& atom, Format format);
/// Inverse of `render(e, Format::json)`; throws std::invalid_argument on
/// malformed input.
ConstExpr parse_json(std::string_view text);

}  // namespace eulersum
