#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycf/cf.hpp"
#include "polycf/errors.hpp"

namespace polycf {

/// Constants with independent reference implementations.
struct NamedConstant {
  enum class Kind {
    PiOver4,
    E,
    Zeta,         // zeta(k)
    Root,         // (p/q)^(r/s)
    SineProduct,  // m sin(pi/m) / pi
    BrounckerPi,  // 4/pi
  };
  Kind kind = Kind::E;
  long k = 0;
  Integer p = 1, q = 1;
  long r = 1, s = 1;
  long m = 0;

  static NamedConstant pi_over_4() { return {Kind::PiOver4}; }
  static NamedConstant e() { return {Kind::E}; }
  static NamedConstant zeta(long k);
  /// (base)^(exponent), base > 0.
  static NamedConstant root(const Rational& base, const Rational& exponent);
  static NamedConstant sine_product(long m);
  static NamedConstant brouncker_pi() { return {Kind::BrounckerPi}; }

  friend bool operator==(const NamedConstant&, const NamedConstant&) = default;
};

/// "zeta(3)", "root(12,7,1,5)", ...
std::string to_string(const NamedConstant& c);
/// Inverse of to_string: "pi/4", "e", "zeta(k)", "root(p,q,r,s)",
/// "sine_product(m)", "4/pi". Throws MalformedInput.
NamedConstant parse_constant(std::string_view text);

struct LimitClaim {
  enum class Kind { ExactRational, Named };
  Kind kind = Kind::ExactRational;
  Rational value;
  NamedConstant constant;

  static LimitClaim exact(const Rational& v) { return {Kind::ExactRational, v, {}}; }
  static LimitClaim named(const NamedConstant& c) { return {Kind::Named, 0, c}; }
};

std::string to_string(const LimitClaim& c);

/// A checked precondition. `first_failure` is the smallest offending index
/// when the condition is per-index.
struct Hypothesis {
  std::string name;
  bool holds = true;
  std::optional<long> first_failure;
  ErrorKind failure_kind = ErrorKind::HypothesisViolation;
};

using Params = std::map<std::string, std::string>;

struct FamilyMember {
  std::string id;
  Params params;
  CFSpec cf;
  LimitClaim limit;
  std::vector<Hypothesis> hypotheses;

  bool verified() const;
};

enum class Check {
  /// Throw on the first failed hypothesis.
  Strict,
  /// Return the member flagged unverified. A partial numerator that vanishes
  /// terminates the fraction there.
  Lenient,
};

/// H(0)/H(-1) = K a_n/b_n with a_n = (H(n) + b(n) H(n-1)) / H(n-2).
FamilyMember pincherle_family(const RationalFunction& H, const RationalFunction& b,
                              Check check = Check::Strict);

/// Polynomial form: H = f/g, b = c/d, cleared to polynomial terms.
/// Limit f(0) g(-1) / (g(0) f(-1)).
FamilyMember pincherle_poly_family(const RationalFunction& f, const RationalFunction& g,
                                   const RationalFunction& c, const RationalFunction& d,
                                   Check check = Check::Strict);

/// 1 = (c0 + c1^2)/c1^2 + K_{n>=2} c(n-2)(c(n-1) + c(n)^2) / c(n)^2, c >= 2.
FamilyMember pincherle_ratio_one(const RationalFunction& c, Check check = Check::Strict);

/// pi/4 from the Leibniz series perturbed by (-1)^(n-1)/f(n).
FamilyMember family_pi(const RationalFunction& f, Check check = Check::Strict);

/// zeta(k) from sum 1/n^k perturbed by 1/d(n).
FamilyMember family_zeta(long k, const RationalFunction& d, Check check = Check::Strict);

/// (1+x)^alpha from the binomial series perturbed by r(n) times its n-th term.
FamilyMember family_binomial(const Rational& alpha, const Rational& x, const RationalFunction& r,
                             Check check = Check::Strict);

/// m sin(pi/m)/pi from prod (1 - 1/(m n)^2) perturbed by 1 + A/(n+1).
FamilyMember family_sin_product(long m, const Integer& A, Check check = Check::Strict);

/// e, from the Bauer-Muir transform of the e fraction with w_n = A(n+1).
FamilyMember family_e_bauer_muir(const Integer& A, Check check = Check::Strict);

/// 6m + 1 for every f with f(n) >= 1 on n >= 1.
FamilyMember family_bml02(const RationalFunction& f, long m, Check check = Check::Strict);

/// a = ab/(a+b+d) - (a+d)(b+d)/(a+b+3d) - ...
FamilyMember ramanujan_entry13(const Rational& a, const Rational& b, const Rational& d,
                               Check check = Check::Strict);

/// 4/pi = 1 + K (2n-1)^2 / 2.
FamilyMember brouncker();

/// e = 2 + K_{n>=2} n/n.
FamilyMember e_fraction();

/// Preset ids, in a fixed order.
const std::vector<std::string>& preset_ids();
/// Default parameters for a preset.
Params preset_defaults(const std::string& id);
/// Builds a preset; `params` overrides the defaults. Unknown ids or
/// parameter names throw InvalidArgument, unparsable values MalformedInput.
FamilyMember make_preset(const std::string& id, const Params& params = {},
                         Check check = Check::Strict);

/// Parses "3", "-1/2" into a rational; throws MalformedInput.
Rational parse_rational(std::string_view text);
/// Parses a machine-sized integer; throws MalformedInput.
long parse_long(std::string_view text);

}  // namespace polycf
