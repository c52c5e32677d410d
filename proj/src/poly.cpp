#include "polycf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <utility>

#include "polycf/errors.hpp"

namespace polycf {

long Degree::value() const {
  if (!value_) throw Error(ErrorKind::ZeroFunction, "degree is minus infinity");
  return *value_;
}

Degree operator+(const Degree& a, const Degree& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity()) {
    return Degree::minus_infinity();
  }
  return Degree(*a.value_ + *b.value_);
}

Degree operator-(const Degree& a, const Degree& b) {
  if (b.is_minus_infinity()) {
    throw Error(ErrorKind::ZeroFunction, "subtracting degree minus infinity");
  }
  if (a.is_minus_infinity()) return Degree::minus_infinity();
  return Degree(*a.value_ - *b.value_);
}

std::string to_string(const Degree& d) {
  return d.is_minus_infinity() ? "-inf" : std::to_string(d.value());
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, unsigned power) {
  std::vector<Integer> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::variable() { return monomial(1, 1); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree IntPolynomial::degree() const {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(static_cast<long>(coeffs_.size()) - 1);
}

const Integer& IntPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::ZeroFunction, "zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading_coefficient()) < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

Integer IntPolynomial::operator()(const Integer& n) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::shifted(const Integer& c) const {
  // Horner in the ring: p(n + c) = (...(p_d (n + c) + p_{d-1})(n + c) ...).
  const IntPolynomial step{IntPolynomial(std::vector<Integer>{c, 1})};
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Integer IntPolynomial::root_bound() const {
  if (is_zero()) {
    throw Error(ErrorKind::ZeroFunction, "zero polynomial vanishes everywhere");
  }
  if (coeffs_.size() == 1) return 0;
  // Fujiwara: |x| <= 2 max_i |a_{d-i}/a_d|^(1/i), rounded up at every step.
  const Integer lc = abs(coeffs_.back());
  const auto d = coeffs_.size() - 1;
  Integer worst = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    Integer a = abs(coeffs_[d - i]);
    if (i == d) a = (a + 1) / 2;
    Integer q, r;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), lc.get_mpz_t());
    const bool exact = mpz_root(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i)) != 0;
    if (!exact) ++r;
    worst = std::max(worst, r);
  }
  return 2 * worst + 1;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Integer poly_eval(const IntPolynomial& p, const Integer& n) { return p(n); }

std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a,
                                                      const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroFunction, "division by zero polynomial");
  const long db = b.degree().value();
  std::vector<Integer> rem = a.coeffs();
  if (a.is_zero() || a.degree().value() < db) return {IntPolynomial{}, a};
  const long da = a.degree().value();
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading_coefficient();
  for (long k = da; k >= db; --k) {
    // Multiply everything so far by lb, then cancel the x^k coefficient.
    for (auto& q : quot) q *= lb;
    for (auto& r : rem) r *= lb;
    const Integer factor = rem[static_cast<std::size_t>(k)] / lb;
    quot[static_cast<std::size_t>(k - db)] += factor;
    for (long i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroFunction, "division by zero polynomial");
  if (a.is_zero()) return {};
  const long db = b.degree().value();
  const long da = a.degree().value();
  if (da < db) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading_coefficient();
  for (long k = da; k >= db; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k)];
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    }
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (long i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  if (!IntPolynomial(std::move(rem)).is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_divide(x, y).second.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Integer mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) out << "-";
    } else {
      out << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
  }
  normalize();
}

RationalFunction::RationalFunction(IntPolynomial num)
    : RationalFunction(std::move(num), IntPolynomial::constant(1)) {}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(IntPolynomial::constant(c.get_num()),
                          IntPolynomial::constant(c.get_den()));
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(IntPolynomial::variable());
}

RationalFunction RationalFunction::from_coefficients(const std::vector<Rational>& coeffs) {
  Integer common = 1;
  for (const auto& c : coeffs) common = lcm(common, c.get_den());
  std::vector<Integer> scaled;
  scaled.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rational s = c * common;
    scaled.push_back(s.get_num());
  }
  return RationalFunction(IntPolynomial(std::move(scaled)), IntPolynomial::constant(common));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  Integer c = gcd(num_.content(), den_.content());
  if (sgn(den_.leading_coefficient()) < 0) c = -c;
  if (c != 1) {
    num_ = divide_exact(num_, IntPolynomial::constant(c));
    den_ = divide_exact(den_, IntPolynomial::constant(c));
  }
}

Rational RationalFunction::operator()(const Integer& n) const {
  Integer d = den_(n);
  if (sgn(d) == 0) {
    throw Error(ErrorKind::PoleAtArgument,
                "denominator " + to_string(den_) + " vanishes at n = " + n.get_str(),
                n.fits_slong_p() ? std::optional<long>(n.get_si()) : std::nullopt);
  }
  Rational out(num_(n), d);
  out.canonicalize();
  return out;
}

RationalFunction RationalFunction::shifted(const Integer& c) const {
  return RationalFunction(num_.shifted(c), den_.shifted(c));
}

RationalFunction RationalFunction::pow(unsigned e) const {
  return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::ZeroFunction, "division by the zero function");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational ratfn_eval(const RationalFunction& r, const Integer& n) { return r(n); }

Degree degree(const RationalFunction& r) {
  if (r.is_zero()) return Degree::minus_infinity();
  return r.num().degree() - r.den().degree();
}

Rational leading_coefficient(const RationalFunction& r) {
  if (r.is_zero()) {
    throw Error(ErrorKind::ZeroFunction, "zero function has no leading coefficient");
  }
  Rational out(r.num().leading_coefficient(), r.den().leading_coefficient());
  out.canonicalize();
  return out;
}

std::string to_string(const RationalFunction& r, const std::string& var) {
  if (r.den() == IntPolynomial::constant(1)) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

Integer root_bound(const RationalFunction& r) {
  Integer bound = r.den().root_bound();
  if (!r.is_zero()) bound = std::max(bound, r.num().root_bound());
  return bound;
}

namespace {

// Reports whether `accept` holds for the sign of r(n) at every integer
// n >= from_n.
bool holds_from(const RationalFunction& r, const Integer& from_n,
                const std::function<bool(int)>& accept) {
  // Outside [-bound, bound] there are no roots or poles, so the sign at
  // either end of the window speaks for everything beyond it.
  const Integer bound = root_bound(r);
  const Integer last = std::max(from_n, bound);
  bool ok = true;
  for (Integer n = std::max(from_n, Integer(-bound)); n <= last; ++n) {
    const Rational v = r(n);  // throws on poles
    if (!accept(sgn(v))) ok = false;
  }
  return ok;
}

}  // namespace

bool eventually_positive(const RationalFunction& r, const Integer& from_n) {
  return holds_from(r, from_n, [](int s) { return s > 0; });
}

bool eventually_nonnegative(const RationalFunction& r, const Integer& from_n) {
  return holds_from(r, from_n, [](int s) { return s >= 0; });
}

bool nonvanishing_from(const RationalFunction& r, const Integer& from_n) {
  return holds_from(r, from_n, [](int s) { return s != 0; });
}

std::optional<Integer> first_zero_from(const RationalFunction& r, const Integer& from_n) {
  if (r.is_zero()) return from_n;
  const Integer last = std::max(from_n, root_bound(r));
  for (Integer n = std::max(from_n, Integer(-root_bound(r))); n <= last; ++n) {
    if (sgn(poly_eval(r.num(), n)) == 0 && sgn(poly_eval(r.den(), n)) != 0) return n;
  }
  return std::nullopt;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        r += term();
      } else if (c == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        r *= unary();
      } else if (c == '/') {
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (c == 'n' || c == '(') {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("exponent must be a small non-negative integer");
    return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
  }

  RationalFunction primary() {
    const char c = peek();
    if (c == 'n') {
      ++pos_;
      return RationalFunction::variable();
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFunction(IntPolynomial::constant(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::MalformedInput,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_ratfn(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace polycf
