#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace polycf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Degree of a polynomial or rational function. The zero function has
/// degree minus infinity, which compares below every finite degree.
class Degree {
 public:
  constexpr explicit Degree(long value) : value_(value) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !value_.has_value(); }
  long value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a,
                                                    const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) {
      return b.is_minus_infinity() <=> a.is_minus_infinity();
    }
    return *a.value_ <=> *b.value_;
  }
  friend Degree operator+(const Degree& a, const Degree& b);
  friend Degree operator-(const Degree& a, const Degree& b);

 private:
  constexpr Degree() = default;
  std::optional<long> value_;
};

std::string to_string(const Degree& d);

/// Polynomial in one variable n with arbitrary-precision integer
/// coefficients, ascending by power. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, unsigned power);
  /// The polynomial n.
  static IntPolynomial variable();

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// Throws ZeroFunction for the zero polynomial.
  const Integer& leading_coefficient() const;
  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  IntPolynomial primitive_part() const;

  Integer operator()(const Integer& n) const;
  Rational operator()(const Rational& x) const;

  /// p(n + c).
  IntPolynomial shifted(const Integer& c) const;
  IntPolynomial pow(unsigned e) const;

  /// Every real root x satisfies |x| < root_bound(). Zero for non-zero
  /// constants; the zero polynomial is rejected.
  Integer root_bound() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& b) { return a *= b; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Integer poly_eval(const IntPolynomial& p, const Integer& n);

/// Pseudo-division: returns (q, r) with lc(b)^(deg a - deg b + 1) a = q b + r.
std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a,
                                                      const IntPolynomial& b);
/// Quotient a / b, which must be exact over the integers.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// "3*n^2 - n + 1" style rendering in the variable `var`.
std::string to_string(const IntPolynomial& p, const std::string& var = "n");

/// Quotient of integer polynomials, kept in canonical form: no common
/// polynomial factor, no common integer content, denominator leading
/// coefficient positive. The zero function is 0 / 1.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(IntPolynomial num, IntPolynomial den);
  explicit RationalFunction(IntPolynomial num);

  static RationalFunction constant(const Rational& c);
  static RationalFunction variable();
  /// Polynomial with rational coefficients, ascending.
  static RationalFunction from_coefficients(const std::vector<Rational>& coeffs);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Throws PoleAtArgument when den(n) = 0.
  Rational operator()(const Integer& n) const;
  Rational operator()(long n) const { return (*this)(Integer(n)); }

  /// r(n + c).
  RationalFunction shifted(const Integer& c) const;
  RationalFunction pow(unsigned e) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void normalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

Rational ratfn_eval(const RationalFunction& r, const Integer& n);
Degree degree(const RationalFunction& r);
/// Throws ZeroFunction for the zero function.
Rational leading_coefficient(const RationalFunction& r);
std::string to_string(const RationalFunction& r, const std::string& var = "n");

/// Bound beyond which neither numerator nor denominator has a real root.
Integer root_bound(const RationalFunction& r);

/// Parses an expression in n such as "3*n^2 - n + 1", "(n+1)/(2n-1)" or
/// "1/2". Supports + - * / ^ (non-negative integer exponents), parentheses
/// and implicit multiplication ("2n"). Throws MalformedInput.
RationalFunction parse_ratfn(std::string_view text);

/// r(n) > 0 for every integer n >= from_n. Exact: signs are constant past
/// the root bound, and every integer below it is evaluated. Throws
/// PoleAtArgument if any integer n >= from_n is a pole.
bool eventually_positive(const RationalFunction& r, const Integer& from_n);
/// r(n) >= 0 for every integer n >= from_n.
bool eventually_nonnegative(const RationalFunction& r, const Integer& from_n);
/// r(n) != 0 for every integer n >= from_n.
bool nonvanishing_from(const RationalFunction& r, const Integer& from_n);
/// Smallest integer n >= from_n with r(n) = 0, if any.
std::optional<Integer> first_zero_from(const RationalFunction& r, const Integer& from_n);

}  // namespace polycf
