#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eulersum {

class Rational;

/// Requested accuracy for a numeric evaluation.
///
/// `target_digits` is the number of correct decimal digits the caller needs;
/// `guard_digits` is added on top when choosing the working precision.
struct Precision {
  int target_digits = 40;
  int guard_digits = 15;

  Precision() = default;
  explicit Precision(int target, int guard = 15);

  /// Binary working precision, ceil((target + guard) * log2(10)).
  mpfr_prec_t working_bits() const;
  /// Same precision with `extra` more target digits.
  Precision extended(int extra) const;
};

inline constexpr mpfr_prec_t kMinPrecisionBits = 64;

/// Arbitrary-precision real backed by an MPFR value.
///
/// Every value carries its own binary precision (never below 64 bits). Binary
/// arithmetic produces a result at the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = kMinPrecisionBits);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  BigFloat(std::string_view decimal, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Rounds (or widens) this value to `bits` in place.
  void set_precision(mpfr_prec_t bits);
  BigFloat with_precision(mpfr_prec_t bits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent2() const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, long b);
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);

 private:
  void widen_to(mpfr_prec_t bits);
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat cot(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// 10^e at `bits` precision, used for tolerances.
BigFloat pow10(long e, mpfr_prec_t bits);

/// Decimal rendering with `digits` significant digits, rounded half-to-even.
/// Fixed notation for moderate exponents, otherwise `d.ddd...e+XX`.
std::string to_string(const BigFloat& x, int digits);
std::ostream& operator<<(std::ostream& os, const BigFloat& x);

/// Bits needed to represent `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

}  // namespace eulersum
