#include "polycf/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polycf/errors.hpp"

namespace polycf {

namespace {

mpfr_prec_t checked_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 24) {
    throw Error(ErrorKind::InvalidArgument,
                "precision out of range: " + std::to_string(bits));
  }
  return static_cast<mpfr_prec_t>(bits);
}

void widen_to(mpfr_ptr target, mpfr_srcptr other) {
  const auto p = mpfr_get_prec(other);
  if (p > mpfr_get_prec(target)) mpfr_prec_round(target, p, MPFR_RNDN);
}

}  // namespace

Real::Real(long bits) {
  mpfr_init2(value_, checked_precision(bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_int(long value, long bits) {
  Real r(bits);
  mpfr_set_si(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_integer(const mpz_class& value, long bits) {
  Real r(bits);
  mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_rational(const mpq_class& value, long bits) {
  Real r(bits);
  mpfr_set_q(r.value_, value.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_string(const std::string& text, long bits, int base) {
  Real r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), base, MPFR_RNDN) != 0) {
    throw Error(ErrorKind::MalformedInput, "not a number: '" + text + "'");
  }
  return r;
}

void Real::round_to(long bits) {
  mpfr_prec_round(value_, checked_precision(bits), MPFR_RNDN);
}

long Real::exponent() const {
  if (!mpfr_regular_p(value_)) return 0;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string Real::to_decimal(int digits) const {
  digits = std::max(digits, 1);
  const int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buffer(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return std::string(buffer.data(), static_cast<std::size_t>(len));
}

std::string Real::to_decimal() const {
  const auto digits = static_cast<int>(
      std::floor(static_cast<double>(precision()) * std::log10(2.0)));
  return to_decimal(digits);
}

std::string Real::to_hex() const {
  const int len = mpfr_snprintf(nullptr, 0, "%Ra", value_);
  std::vector<char> buffer(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%Ra", value_);
  return std::string(buffer.data(), static_cast<std::size_t>(len));
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real Real::scaled(long e) const {
  Real r(*this);
  mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, unsigned long e) {
  Real r(x);
  mpfr_pow_ui(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real relative_difference(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  Real scale = abs(a);
  if (Real ab = abs(b); ab > scale) scale = ab;
  if (scale.is_zero()) return diff;
  return diff / scale;
}

}  // namespace polycf
