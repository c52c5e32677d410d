#include "polycf/cf.hpp"

#include <algorithm>
#include <string>

#include "polycf/errors.hpp"

namespace polycf {

Term term_at(const CFSpec& cf, long n) {
  if (n < 1) throw Error(ErrorKind::NoSuchTerm, "term indices start at 1", n);
  Term t;
  const auto m = static_cast<long>(cf.prefix.size());
  if (n <= m) {
    t = cf.prefix[static_cast<std::size_t>(n - 1)];
  } else {
    if (!cf.tail) {
      throw Error(ErrorKind::NoSuchTerm,
                  "finite continued fraction has " + std::to_string(m) + " terms", n);
    }
    const Integer arg = cf.tail->start_index + (n - m) - 1;
    t.a = cf.tail->a(arg);
    t.b = cf.tail->b(arg);
  }
  if (sgn(t.a) == 0) throw Error(ErrorKind::ZeroPartialNumerator, "a_n = 0", n);
  return t;
}

std::vector<Term> realize_terms(const CFSpec& cf, long count) {
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long n = 1; n <= count; ++n) out.push_back(term_at(cf, n));
  return out;
}

CFSpec truncate(const CFSpec& cf, long count) {
  return CFSpec{cf.b0, realize_terms(cf, count), std::nullopt};
}

// ---------------------------------------------------------------------------

ConvergentCursor::ConvergentCursor(const CFSpec& cf) : cf_(&cf), A_(cf.b0) {}

void ConvergentCursor::advance() { advance(term_at(*cf_, index_ + 1)); }

void ConvergentCursor::advance(const Term& t) {
  Rational A_next = t.b * A_ + t.a * A_prev_;
  Rational B_next = t.b * B_ + t.a * B_prev_;
  A_prev_ = std::move(A_);
  B_prev_ = std::move(B_);
  A_ = std::move(A_next);
  B_ = std::move(B_next);
  ++index_;
}

std::vector<Convergent> convergents(const CFSpec& cf, long N) {
  ConvergentCursor cursor(cf);
  std::vector<Convergent> out;
  out.reserve(static_cast<std::size_t>(std::max(N, 0L)) + 1);
  out.push_back(cursor.current());
  for (long n = 1; n <= N; ++n) {
    cursor.advance();
    out.push_back(cursor.current());
  }
  return out;
}

ApproximantSequence approximants(const CFSpec& cf, long N) {
  ApproximantSequence seq;
  for (const auto& c : convergents(cf, N)) {
    ApproximantSequence::Entry e{c.index, std::nullopt};
    if (sgn(c.B) != 0) e.value = Rational(c.A / c.B);
    seq.entries.push_back(std::move(e));
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Numerical evaluation

namespace {

constexpr long kGuardBits = 32;
constexpr long kRescaleExponent = 1L << 16;

std::size_t rational_bits(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Runs the recurrence in exact arithmetic until the convergents outgrow
// `exact_limit` bits, then continues in floating point.
class Stepper {
 public:
  Stepper(const CFSpec& cf, long precision_bits, EvalMode mode)
      : cf_(&cf),
        cursor_(cf),
        bits_(precision_bits + kGuardBits),
        exact_limit_(static_cast<std::size_t>(16 * precision_bits)),
        exact_(mode != EvalMode::Float),
        allow_switch_(mode == EvalMode::Auto),
        A_prev_(bits_), B_prev_(bits_), A_(bits_), B_(bits_) {
    if (!exact_) to_float();
  }

  // Returns false when a finite fraction has no further terms.
  bool advance() {
    const long n = index() + 1;
    Term t;
    try {
      t = term_at(*cf_, n);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoSuchTerm && cf_->is_finite()) return false;
      throw;
    }
    if (exact_) {
      cursor_.advance(t);
      if (allow_switch_) {
        const auto c = cursor_.current();
        if (rational_bits(c.A) + rational_bits(c.B) > exact_limit_) to_float();
      }
    } else {
      const Real a = Real::from_rational(t.a, bits_);
      const Real b = Real::from_rational(t.b, bits_);
      Real A_next = b * A_ + a * A_prev_;
      Real B_next = b * B_ + a * B_prev_;
      A_prev_ = std::move(A_);
      B_prev_ = std::move(B_);
      A_ = std::move(A_next);
      B_ = std::move(B_next);
      ++float_index_;
      rescale();
    }
    return true;
  }

  long index() const { return exact_ ? cursor_.index() : float_index_; }

  std::optional<Real> approximant() const {
    if (exact_) {
      const auto c = cursor_.current();
      if (sgn(c.B) == 0) return std::nullopt;
      return Real::from_rational(Rational(c.A / c.B), bits_);
    }
    if (B_.is_zero()) return std::nullopt;
    return A_ / B_;
  }

 private:
  void to_float() {
    const auto cur = cursor_.current();
    const auto prev = cursor_.previous();
    A_ = Real::from_rational(cur.A, bits_);
    B_ = Real::from_rational(cur.B, bits_);
    A_prev_ = Real::from_rational(prev.A, bits_);
    B_prev_ = Real::from_rational(prev.B, bits_);
    float_index_ = cursor_.index();
    exact_ = false;
    rescale();
  }

  void rescale() {
    long e = std::max(A_.exponent(), B_.exponent());
    if (std::abs(e) < kRescaleExponent) return;
    A_ = A_.scaled(-e);
    B_ = B_.scaled(-e);
    A_prev_ = A_prev_.scaled(-e);
    B_prev_ = B_prev_.scaled(-e);
  }

  const CFSpec* cf_;
  ConvergentCursor cursor_;
  long bits_;
  std::size_t exact_limit_;
  bool exact_;
  bool allow_switch_;
  long float_index_ = 0;
  Real A_prev_, B_prev_, A_, B_;
};

void check_precision(long precision_bits) {
  if (precision_bits < 16) {
    throw Error(ErrorKind::InvalidArgument, "precision_bits must be at least 16");
  }
}

}  // namespace

LimitEstimate evaluate(const CFSpec& cf, const Real& tol, long max_terms,
                       long precision_bits, EvalMode mode) {
  check_precision(precision_bits);
  if (tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (max_terms < 2) throw Error(ErrorKind::InvalidArgument, "max_terms must be at least 2");

  Stepper stepper(cf, precision_bits, mode);
  Real last = *stepper.approximant();
  Real diff(precision_bits);
  long small_in_a_row = 0;
  bool converged = false;
  bool exhausted = false;

  while (stepper.index() < max_terms) {
    if (!stepper.advance()) {
      exhausted = true;
      break;
    }
    auto value = stepper.approximant();
    if (!value) continue;
    diff = abs(*value - last);
    last = std::move(*value);
    small_in_a_row = diff < tol ? small_in_a_row + 1 : 0;
    if (small_in_a_row >= 2) {
      converged = true;
      break;
    }
  }

  LimitEstimate out;
  out.terms_used = stepper.index();
  if (exhausted) {
    // A finite fraction's last approximant is its exact value.
    out.converged = true;
    out.error_bound = Real(precision_bits);
  } else {
    out.converged = converged;
    out.error_bound = diff;
  }
  out.value = std::move(last);
  out.value.round_to(precision_bits);
  out.error_bound.round_to(precision_bits);
  return out;
}

LimitEstimate evaluate_at(const CFSpec& cf, long terms, long precision_bits,
                          const Real& tol, EvalMode mode) {
  check_precision(precision_bits);
  if (terms < 0) throw Error(ErrorKind::InvalidArgument, "terms must be non-negative");

  Stepper stepper(cf, precision_bits, mode);
  Real last = *stepper.approximant();
  Real diff(precision_bits);
  bool exhausted = false;
  while (stepper.index() < terms) {
    if (!stepper.advance()) {
      exhausted = true;
      break;
    }
    if (auto value = stepper.approximant()) {
      diff = abs(*value - last);
      last = std::move(*value);
    }
  }

  LimitEstimate out;
  out.terms_used = stepper.index();
  out.error_bound = exhausted ? Real(precision_bits) : diff;
  out.error_bound.round_to(precision_bits);
  out.converged = exhausted || out.error_bound < tol;
  out.value = std::move(last);
  out.value.round_to(precision_bits);
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence transformations

CFSpec similarity_scale(const CFSpec& cf, std::span<const Rational> r) {
  if (r.empty() || r[0] != 1) {
    throw Error(ErrorKind::InvalidArgument, "scale sequence must start with r_0 = 1");
  }
  CFSpec out{cf.b0, {}, std::nullopt};
  const auto N = static_cast<long>(r.size()) - 1;
  out.prefix.reserve(static_cast<std::size_t>(N));
  for (long n = 1; n <= N; ++n) {
    const Rational& rn = r[static_cast<std::size_t>(n)];
    if (sgn(rn) == 0) throw Error(ErrorKind::ZeroScaleFactor, "r_n = 0", n);
    const Term t = term_at(cf, n);
    out.prefix.push_back(Term{rn * r[static_cast<std::size_t>(n - 1)] * t.a, rn * t.b});
  }
  return out;
}

std::vector<Rational> integer_scale_factors(const CFSpec& cf, long N) {
  std::vector<Rational> r{Rational(1)};
  r.reserve(static_cast<std::size_t>(std::max(N, 0L)) + 1);
  for (long n = 1; n <= N; ++n) {
    const Term t = term_at(cf, n);
    const Rational partial = r.back() * t.a;
    Integer rn = lcm(t.b.get_den(), partial.get_den());
    r.emplace_back(rn);
  }
  return r;
}

CFSpec to_integer_cf(const CFSpec& cf, long N) {
  const auto r = integer_scale_factors(cf, N);
  return similarity_scale(cf, r);
}

CFSpec tail_cf(const CFSpec& cf, long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "tail offset must be non-negative");
  realize_terms(cf, k);
  CFSpec out{Rational(0), {}, cf.tail};
  const auto m = static_cast<long>(cf.prefix.size());
  if (k <= m) {
    out.prefix.assign(cf.prefix.begin() + k, cf.prefix.end());
  } else {
    out.tail->start_index += k - m;
  }
  return out;
}

}  // namespace polycf
