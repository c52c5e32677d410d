#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "polycf/cf.hpp"
#include "polycf/generators.hpp"

namespace polycf {

// ---- Tietze's irrationality criterion ---------------------------------------

struct TietzeReport {
  enum class Method {
    /// Finite scan plus a sign certificate for every index past it.
    AsymptoticPlusScan,
    /// No certificate was possible; holds is false and the scan alone
    /// decided nothing.
    ScanOnly,
  };
  bool holds = false;
  std::optional<long> N0;
  Method method = Method::ScanOnly;
  /// Last index checked term by term (at least the requested scan limit).
  long scan_limit = 0;
};

/// Checks b_n >= |a_n|, and b_n >= |a_n| + 1 where a_{n+1} < 0, for all
/// n >= N0. Terms up to the scan limit must be integers (NonIntegerTerms
/// otherwise). For a symbolic tail the scan is extended to the root bound
/// of b - |a| (or b - |a| - 1), past which the sign is constant.
TietzeReport tietze_check(const CFSpec& cf, long scan_limit);

std::string to_string(TietzeReport::Method m);

// ---- Growth of canonical denominators ---------------------------------------

struct GrowthBound {
  enum class Kind {
    /// B_n >= C (D/(1+eps))^n (n!)^k.
    FactorialPower,
    /// B_n >= C phi^n.
    GoldenRatio,
  };
  Kind kind = Kind::GoldenRatio;
  long k = 0;
  Rational D;
  Rational epsilon;
  Real C;
  Real phi;
  long terms = 0;
};

/// Smallest ratio B_n / bound_n over 1 <= n <= N. The factorial bound
/// applies when both tail functions are non-constant polynomials; otherwise
/// the golden-ratio bound. Every a_n, b_n in range must be >= 1
/// (HypothesisViolation); N < 1 throws EmptyRange.
GrowthBound growth_diagnostics(const CFSpec& cf, long N, const Rational& epsilon = 1,
                               long precision_bits = 128);

std::string to_string(GrowthBound::Kind k);

// ---- Reference constants ------------------------------------------------------

/// Independent high-precision value of a named constant, with relative error
/// below 2^(4 - precision_bits). None of the methods uses continued
/// fractions: Machin's formula for pi, the factorial series for e, direct
/// summation with an Euler-Maclaurin tail for zeta(k), Newton's method for
/// roots, and the Taylor series for the sine. Results are cached per
/// (constant, precision); the cache is safe for concurrent use.
Real reference_constant(const NamedConstant& c, long precision_bits);

/// Also persists cached constants under `dir` (created on demand). An empty
/// optional turns the on-disk cache off again.
void set_constant_cache_dir(std::optional<std::filesystem::path> dir);
/// The directory named by POLYCF_CONSTANT_CACHE, if set and non-empty.
std::optional<std::filesystem::path> constant_cache_dir_from_env();
/// Drops the in-memory cache.
void clear_constant_cache();

// ---- Verification -----------------------------------------------------------

struct VerificationReport {
  enum class Verdict { Pass, Fail, Inconclusive };
  std::string id;
  Params params;
  long terms = 0;
  long precision_bits = 0;
  std::string claimed;
  Real value;
  Real oracle;
  Real abs_err;
  Real rel_err;
  /// Successive-approximant difference plus the oracle's error.
  Real error_bound;
  Real tolerance;
  Verdict verdict = Verdict::Fail;
};

std::string to_string(VerificationReport::Verdict v);

/// Evaluates the member's fraction after exactly `terms` terms and compares
/// it with the claimed limit. Pass iff |value - limit| <= max(tol, error
/// bound). Otherwise Inconclusive while the last successive difference is
/// still above tol, Fail once it is below.
VerificationReport verify_limit(const FamilyMember& member, long terms, long precision_bits,
                                const Real& tol);

/// Oracle value of a limit claim at the given precision.
Real limit_value(const LimitClaim& claim, long precision_bits);

}  // namespace polycf
