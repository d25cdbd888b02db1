#include "eulersum/symbolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "eulersum/exact.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum {

// ---------------------------------------------------------------- atoms

Atom Atom::pi(int power) {
  if (power < 1) throw std::invalid_argument("Atom::pi: power must be positive");
  return Atom(AtomKind::pi, power, 0, 1);
}

Atom Atom::catalan() { return Atom(AtomKind::catalan, 0, 0, 1); }

Atom Atom::sqrt3() { return Atom(AtomKind::sqrt3, 0, 0, 1); }

Atom Atom::zeta(int s) {
  if (s < 2) throw std::invalid_argument("Atom::zeta: s must be >= 2 (got " + std::to_string(s) + ")");
  return Atom(AtomKind::zeta, s, 0, 1);
}

Atom Atom::hurwitz(int s, const Rational& t) {
  if (s < 2) throw std::invalid_argument("Atom::hurwitz: s must be >= 2 (got " + std::to_string(s) + ")");
  if (t.sign() <= 0 || t >= Rational(1)) {
    throw std::invalid_argument("Atom::hurwitz: t must lie strictly inside (0, 1) (got " + t.str() + ")");
  }
  if (!t.numerator().fits_slong_p() || !t.denominator().fits_slong_p()) {
    throw std::invalid_argument("Atom::hurwitz: argument too large");
  }
  return Atom(AtomKind::hurwitz, s, t.numerator().get_si(), t.denominator().get_si());
}

Atom Atom::cot(long j, long n) {
  if (n < 2 || j <= 0 || j >= n) {
    throw std::invalid_argument("Atom::cot: need 0 < j < n (got " + std::to_string(j) + "/" + std::to_string(n) + ")");
  }
  const long g = std::gcd(j, n);
  j /= g;
  n /= g;
  if (2 * j == n) throw std::invalid_argument("Atom::cot: cot(pi/2) = 0 is not an atom");
  return Atom(AtomKind::cot, 0, j, n);
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case AtomKind::pi:
    case AtomKind::zeta:
      return a.order_ <=> b.order_;
    case AtomKind::hurwitz:
      if (a.order_ != b.order_) return a.order_ <=> b.order_;
      return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    case AtomKind::cot:
      if (a.den_ != b.den_) return a.den_ <=> b.den_;
      return a.num_ <=> b.num_;
    case AtomKind::catalan:
    case AtomKind::sqrt3:
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- canonical form

namespace {

// Sorts atoms, merges pi powers and folds sqrt(3)^2 = 3 into the coefficient.
Term normalize_term(Term t) {
  int pi_power = 0;
  int sqrt3_count = 0;
  std::vector<Atom> rest;
  rest.reserve(t.atoms.size());
  for (const Atom& a : t.atoms) {
    if (a.kind() == AtomKind::pi) {
      pi_power += a.order();
    } else if (a.kind() == AtomKind::sqrt3) {
      ++sqrt3_count;
    } else {
      rest.push_back(a);
    }
  }
  if (sqrt3_count >= 2) t.coeff *= pow(Rational(3), sqrt3_count / 2);
  if (pi_power > 0) rest.push_back(Atom::pi(pi_power));
  if (sqrt3_count % 2 == 1) rest.push_back(Atom::sqrt3());
  std::sort(rest.begin(), rest.end());
  t.atoms = std::move(rest);
  return t;
}

bool atoms_less(const std::vector<Atom>& a, const std::vector<Atom>& b) {
  // Shorter products first at equal prefixes; lexicographic otherwise.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct AtomsLess {
  bool operator()(const std::vector<Atom>& a, const std::vector<Atom>& b) const { return atoms_less(a, b); }
};

}  // namespace

ConstExpr::ConstExpr(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back(Term{constant, {}});
}

ConstExpr::ConstExpr(const Atom& atom) { terms_.push_back(normalize_term(Term{Rational(1), {atom}})); }

ConstExpr ConstExpr::from_terms(std::vector<Term> terms) {
  std::map<std::vector<Atom>, Rational, AtomsLess> merged;
  for (auto& raw : terms) {
    if (raw.coeff.is_zero()) continue;
    Term t = normalize_term(std::move(raw));
    auto [it, inserted] = merged.try_emplace(std::move(t.atoms), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  ConstExpr out;
  for (auto& [atoms, coeff] : merged) {
    if (!coeff.is_zero()) out.terms_.push_back(Term{coeff, atoms});
  }
  return out;
}

bool ConstExpr::free_of(AtomKind kind) const {
  for (const auto& t : terms_) {
    for (const auto& a : t.atoms) {
      if (a.kind() == kind) return false;
    }
  }
  return true;
}

ConstExpr& ConstExpr::operator+=(const ConstExpr& rhs) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  *this = from_terms(std::move(all));
  return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& rhs) { return *this += -rhs; }

ConstExpr& ConstExpr::operator*=(const ConstExpr& rhs) {
  *this = *this * rhs;
  return *this;
}

ConstExpr& ConstExpr::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= rhs;
  return *this;
}

ConstExpr ConstExpr::operator-() const {
  ConstExpr r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) {
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Term t{x.coeff * y.coeff, x.atoms};
      t.atoms.insert(t.atoms.end(), y.atoms.begin(), y.atoms.end());
      prod.push_back(std::move(t));
    }
  }
  return ConstExpr::from_terms(std::move(prod));
}

ConstExpr add(const ConstExpr& a, const ConstExpr& b) { return a + b; }
ConstExpr scale(const ConstExpr& a, const Rational& c) { return a * c; }
ConstExpr mul(const ConstExpr& a, const ConstExpr& b) { return a * b; }
ConstExpr canonical(const ConstExpr& e) { return ConstExpr::from_terms(e.terms()); }

// ---------------------------------------------------------------- constructors

ConstExpr zeta_const(int s) {
  if (s == 0) return ConstExpr(Rational(-1, 2));
  if (s == 1) throw std::invalid_argument("zeta_const: zeta has a pole at s = 1");
  if (s < 0) throw std::invalid_argument("zeta_const: negative arguments are not supported");
  return ConstExpr(Atom::zeta(s));
}

ConstExpr hurwitz_expr(int s, const Rational& t) {
  if (t == Rational(1)) return zeta_const(s);
  return ConstExpr(Atom::hurwitz(s, t));
}

ConstExpr cot_expr(long j, long n) {
  if (n < 2 || j <= 0 || j >= n) {
    throw std::invalid_argument("cot_expr: need 0 < j < n (got " + std::to_string(j) + "/" + std::to_string(n) + ")");
  }
  if (2 * j == n) return {};
  return ConstExpr(Atom::cot(j, n));
}

ConstExpr pi_expr(int power) { return ConstExpr(Atom::pi(power)); }

// ---------------------------------------------------------------- simplification

ConstExpr substitute(const ConstExpr& e, const std::function<std::optional<ConstExpr>(const Atom&)>& rule) {
  std::vector<Term> out;
  for (const auto& term : e.terms()) {
    ConstExpr product(term.coeff);
    std::vector<Atom> kept;
    for (const auto& atom : term.atoms) {
      if (auto replacement = rule(atom)) {
        product *= *replacement;
      } else {
        kept.push_back(atom);
      }
    }
    for (const auto& t : product.terms()) {
      Term merged = t;
      merged.atoms.insert(merged.atoms.end(), kept.begin(), kept.end());
      out.push_back(std::move(merged));
    }
  }
  return ConstExpr::from_terms(std::move(out));
}

ConstExpr simplify_even_zeta(const ConstExpr& e) {
  return substitute(e, [](const Atom& a) -> std::optional<ConstExpr> {
    if (a.kind() != AtomKind::zeta || a.order() % 2 != 0) return std::nullopt;
    return ConstExpr(Atom::pi(a.order())) * even_zeta_pi_coefficient(a.order());
  });
}

namespace {

// cot(pi j/n) for 0 < j/n < 1 with known algebraic values substituted.
ConstExpr reduced_cot(long j, long n) {
  const long g = std::gcd(j, n);
  j /= g;
  n /= g;
  if (2 * j == n) return {};
  if (2 * j > n) return -reduced_cot(n - j, n);
  if (n == 4) return ConstExpr(Rational(1));
  if (n == 3) return ConstExpr(Atom::sqrt3()) * Rational(1, 3);
  if (n == 6) return ConstExpr(Atom::sqrt3());
  return ConstExpr(Atom::cot(j, n));
}

// Q_m with D^m cot(pi x) = (-pi)^m Q_m(cot(pi x)); Q_0 = c, Q_{m+1} = (1 + c^2) Q_m'.
std::vector<BigInt> cot_derivative_polynomial(int m) {
  std::vector<BigInt> q{BigInt(0), BigInt(1)};
  for (int step = 0; step < m; ++step) {
    std::vector<BigInt> d(q.size() > 1 ? q.size() - 1 : 1, BigInt(0));
    for (std::size_t i = 1; i < q.size(); ++i) d[i - 1] = q[i] * static_cast<unsigned long>(i);
    std::vector<BigInt> next(d.size() + 2, BigInt(0));
    for (std::size_t i = 0; i < d.size(); ++i) {
      next[i] += d[i];
      next[i + 2] += d[i];
    }
    q = std::move(next);
  }
  return q;
}

}  // namespace

ConstExpr reflection_polynomial(int s, const Rational& t) {
  if (s < 1) throw std::invalid_argument("reflection_polynomial: s must be >= 1");
  if (t.sign() <= 0 || t >= Rational(1)) throw std::invalid_argument("reflection_polynomial: t must lie in (0, 1)");
  const ConstExpr c = reduced_cot(t.numerator().get_si(), t.denominator().get_si());
  const auto poly = cot_derivative_polynomial(s - 1);
  ConstExpr value;
  ConstExpr power(Rational(1));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] != 0) value += power * Rational(poly[i]);
    power *= c;
  }
  return value * ConstExpr(Atom::pi(s)) * (Rational(1) / Rational(factorial(s - 1)));
}

ConstExpr simplify_special_points(const ConstExpr& e, bool catalan) {
  const Rational half(1, 2);
  return substitute(e, [&](const Atom& a) -> std::optional<ConstExpr> {
    if (a.kind() == AtomKind::cot) return reduced_cot(a.num(), a.den());
    if (a.kind() != AtomKind::hurwitz) return std::nullopt;
    const int s = a.order();
    const Rational t = a.argument();
    if (catalan && s == 2 && t.denominator() == 4) {
      // zeta(2, 1/4) = pi^2 + 8G, zeta(2, 3/4) = pi^2 - 8G
      const Rational sign = t == Rational(1, 4) ? Rational(1) : Rational(-1);
      return pi_expr(2) + ConstExpr(Atom::catalan()) * (sign * Rational(8));
    }
    if (t == half) return zeta_const(s) * (pow(Rational(2), s) - Rational(1));
    if (t > half) {
      const Rational u = Rational(1) - t;
      ConstExpr r = reflection_polynomial(s, u) - ConstExpr(Atom::hurwitz(s, u));
      return s % 2 == 0 ? r : -r;
    }
    return std::nullopt;
  });
}

ConstExpr simplify(const ConstExpr& e, const SimplifyFlags& flags) {
  ConstExpr r = e;
  if (flags.special_points) {
    r = simplify_special_points(r, flags.catalan);
  } else if (flags.catalan) {
    r = substitute(r, [](const Atom& a) -> std::optional<ConstExpr> {
      if (a.kind() != AtomKind::hurwitz || a.order() != 2 || a.den() != 4) return std::nullopt;
      const Rational sign = a.num() == 1 ? Rational(1) : Rational(-1);
      return pi_expr(2) + ConstExpr(Atom::catalan()) * (sign * Rational(8));
    });
  }
  if (flags.even_zeta) r = simplify_even_zeta(r);
  return r;
}

// ---------------------------------------------------------------- evaluation

BigFloat eval_numeric(const ConstExpr& e, const Precision& prec) {
  const mpfr_prec_t bits = prec.working_bits();
  std::map<Atom, BigFloat> cache;
  const auto value_of = [&](const Atom& a) -> const BigFloat& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    BigFloat v(bits);
    switch (a.kind()) {
      case AtomKind::pi:
        v = pow(numerics::pi_const(prec), a.order());
        break;
      case AtomKind::catalan:
        v = numerics::catalan(prec);
        break;
      case AtomKind::sqrt3:
        v = numerics::sqrt3(prec);
        break;
      case AtomKind::zeta:
        v = numerics::zeta(a.order(), prec);
        break;
      case AtomKind::hurwitz:
        v = numerics::hurwitz_zeta(a.order(), a.argument(), prec);
        break;
      case AtomKind::cot:
        v = numerics::cot_pi(a.num(), a.den(), prec);
        break;
    }
    return cache.emplace(a, std::move(v)).first->second;
  };
  BigFloat total(bits);
  for (const auto& term : e.terms()) {
    BigFloat product(term.coeff, bits);
    for (const auto& a : term.atoms) product *= value_of(a);
    total += product;
  }
  return total;
}

}  // namespace eulersum
