#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace polycf {

/// Binary floating-point number with an explicit precision in bits, backed
/// by MPFR. Binary operations round to nearest at the larger precision of
/// the two operands.
class Real {
 public:
  explicit Real(long bits = 128);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_int(long value, long bits);
  static Real from_integer(const mpz_class& value, long bits);
  static Real from_rational(const mpq_class& value, long bits);
  /// Parses a decimal ("1.5e-3") or, with base 16, a hex mantissa string.
  static Real from_string(const std::string& text, long bits, int base = 10);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Rounds in place to a new precision.
  void round_to(long bits);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  long exponent() const;  // binary exponent, 0 for zero
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_decimal(int digits) const;
  /// Decimal string with as many digits as the precision justifies.
  std::string to_decimal() const;
  /// Exact hexadecimal form, round-trips through from_string(text, bits, 16).
  std::string to_hex() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& lhs, const Real& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);

  /// Multiplies by 2^e exactly.
  Real scaled(long e) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& x, unsigned long e);
/// |a - b| / max(|a|, |b|), or |a - b| when both are zero.
Real relative_difference(const Real& a, const Real& b);

}  // namespace polycf
