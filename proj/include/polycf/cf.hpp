#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polycf/poly.hpp"
#include "polycf/real.hpp"

namespace polycf {

/// One partial quotient a_n / b_n.
struct Term {
  Rational a;
  Rational b;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Symbolic tail: the k-th term past the prefix (k >= 1) is
/// (a(start_index + k - 1), b(start_index + k - 1)).
struct Tail {
  RationalFunction a;
  RationalFunction b;
  long start_index = 1;
  friend bool operator==(const Tail&, const Tail&) = default;
};

/// b0 + K(a_n / b_n): a leading term, a finite prefix of exact terms, and an
/// optional rational-function tail. Without a tail the fraction is finite.
struct CFSpec {
  Rational b0;
  std::vector<Term> prefix;
  std::optional<Tail> tail;

  bool is_finite() const { return !tail.has_value(); }
  friend bool operator==(const CFSpec&, const CFSpec&) = default;
};

/// Term n >= 1. Throws NoSuchTerm past the end of a finite fraction,
/// PoleAtArgument from the tail, and ZeroPartialNumerator when a_n = 0.
Term term_at(const CFSpec& cf, long n);
/// Terms 1..count.
std::vector<Term> realize_terms(const CFSpec& cf, long count);
/// Prefix-only fraction made of terms 1..count.
CFSpec truncate(const CFSpec& cf, long count);

/// Canonical numerator and denominator A_N, B_N.
struct Convergent {
  long index = 0;
  Rational A;
  Rational B;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Stateful walk over the fundamental recurrence
///   A_N = b_N A_{N-1} + a_N A_{N-2},  B_N = b_N B_{N-1} + a_N B_{N-2}
/// starting from A_{-1} = 1, B_{-1} = 0, A_0 = b0, B_0 = 1.
class ConvergentCursor {
 public:
  explicit ConvergentCursor(const CFSpec& cf);

  void advance();
  void advance(const Term& t);
  Convergent current() const { return {index_, A_, B_}; }
  Convergent previous() const { return {index_ - 1, A_prev_, B_prev_}; }
  long index() const { return index_; }

 private:
  const CFSpec* cf_;
  long index_ = 0;
  Rational A_prev_{1}, B_prev_{0};
  Rational A_, B_{1};
};

/// A_n, B_n for n = 0..N.
std::vector<Convergent> convergents(const CFSpec& cf, long N);

/// Classical approximants A_n / B_n; undefined where B_n = 0.
struct ApproximantSequence {
  struct Entry {
    long index = 0;
    std::optional<Rational> value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  const std::optional<Rational>& operator[](std::size_t i) const { return entries.at(i).value; }
  std::size_t size() const { return entries.size(); }
};

ApproximantSequence approximants(const CFSpec& cf, long N);

/// Numerical limit of a continued fraction.
struct LimitEstimate {
  Real value;
  Real error_bound;
  long terms_used = 0;
  bool converged = false;
};

enum class EvalMode {
  /// Exact rationals while the convergents stay small, then floating point.
  Auto,
  Exact,
  Float,
};

/// Iterates approximants until two consecutive successive differences are
/// below `tol`, or `max_terms` terms have been consumed (converged = false).
/// error_bound is the last observed successive difference.
LimitEstimate evaluate(const CFSpec& cf, const Real& tol, long max_terms,
                       long precision_bits, EvalMode mode = EvalMode::Auto);

/// Approximant after exactly `terms` terms (fewer for a shorter finite
/// fraction). error_bound is the difference to the previous defined
/// approximant; converged reports error_bound < tol.
LimitEstimate evaluate_at(const CFSpec& cf, long terms, long precision_bits,
                          const Real& tol, EvalMode mode = EvalMode::Auto);

/// Equivalence transformation a_n -> r_n r_{n-1} a_n, b_n -> r_n b_n for
/// n = 1..r.size()-1 (r_0 must be 1). Every approximant is preserved.
CFSpec similarity_scale(const CFSpec& cf, std::span<const Rational> r);

/// Picks scale factors term by term so that terms 1..N become integers.
CFSpec to_integer_cf(const CFSpec& cf, long N);
/// The scale factors to_integer_cf would use (r_0 = 1 included).
std::vector<Rational> integer_scale_factors(const CFSpec& cf, long N);

/// K_{j>=1} a_{k+j} / b_{k+j} with b0 = 0.
CFSpec tail_cf(const CFSpec& cf, long k);

}  // namespace polycf
