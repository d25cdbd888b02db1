#include "eulersum/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "eulersum/rational.hpp"

namespace eulersum {

namespace {

mpfr_prec_t clamp_bits(mpfr_prec_t bits) { return std::max(bits, kMinPrecisionBits); }

template <typename Op>
BigFloat unary(const BigFloat& x, Op op) {
  BigFloat r(x.precision());
  op(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 1;
}

Precision::Precision(int target, int guard) : target_digits(target), guard_digits(guard) {
  if (target < 10) throw std::invalid_argument("Precision: target_digits must be >= 10");
  if (guard < 0) throw std::invalid_argument("Precision: guard_digits must be >= 0");
}

mpfr_prec_t Precision::working_bits() const {
  return clamp_bits(digits_to_bits(target_digits + guard_digits));
}

Precision Precision::extended(int extra) const { return Precision(target_digits + extra, guard_digits); }

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_q(value_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, clamp_bits(bits));
  const std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(value_)) {
    mpfr_clear(value_);
    throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, kMinPrecisionBits);
  mpfr_set_zero(value_, 1);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::set_precision(mpfr_prec_t bits) { mpfr_prec_round(value_, clamp_bits(bits), MPFR_RNDN); }

BigFloat BigFloat::with_precision(mpfr_prec_t bits) const {
  BigFloat r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent2() const {
  if (!mpfr_regular_p(value_)) return mpfr_zero_p(value_) ? -(1L << 40) : (1L << 40);
  return mpfr_get_exp(value_);
}

void BigFloat::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat r(std::max(a.precision(), b.precision()));
  op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a);
  return r *= b;
}

BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a);
  return r /= b;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0 && !mpfr_nan_p(a.raw()); }

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.raw(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat cot(const BigFloat& x) { return unary(x, mpfr_cot); }

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow10(long e, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

std::string to_string(const BigFloat& x, int digits) {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(x.raw())) return "nan";
  if (mpfr_inf_p(x.raw())) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), x.raw(), MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10
  const long point = static_cast<long>(exp10);
  std::string out;
  if (point > -5 && point <= 21) {
    if (point <= 0) {
      out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mant;
    } else if (point >= static_cast<long>(mant.size())) {
      out = mant + std::string(static_cast<std::size_t>(point) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<std::size_t>(point)) + "." + mant.substr(static_cast<std::size_t>(point));
    }
  } else {
    const long e = point - 1;
    out = mant.substr(0, 1) + (mant.size() > 1 ? "." + mant.substr(1) : "") + "e" + (e < 0 ? "-" : "+") +
          std::to_string(e < 0 ? -e : e);
  }
  return sign + out;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << to_string(x, static_cast<int>(static_cast<double>(x.precision()) * 0.30103));
}

}  // namespace eulersum
