#include "polycf/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "polycf/errors.hpp"

namespace polycf {

// ---- Tietze -------------------------------------------------------------------

namespace {

constexpr long kMaxTietzeScan = 1'000'000;

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Integer values at every integer argument. A polynomial with denominator d
// is integer-valued iff num(n) = 0 mod d for n = 0..d-1.
bool integer_valued(const RationalFunction& r) {
  if (!r.is_polynomial()) return false;
  const Integer d = r.den().coeffs().front();
  if (d == 1) return true;
  if (d > kMaxTietzeScan) return false;
  for (Integer n = 0; n < d; ++n) {
    if (poly_eval(r.num(), n) % d != 0) return false;
  }
  return true;
}

}  // namespace

std::string to_string(TietzeReport::Method m) {
  return m == TietzeReport::Method::AsymptoticPlusScan ? "AsymptoticPlusScan" : "ScanOnly";
}

TietzeReport tietze_check(const CFSpec& cf, long scan_limit) {
  if (scan_limit < 1) throw Error(ErrorKind::InvalidArgument, "scan_limit must be positive");
  const long m = static_cast<long>(cf.prefix.size());
  TietzeReport rep;
  rep.method = TietzeReport::Method::ScanOnly;

  auto check_integers = [&](const std::vector<Term>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (!is_integer(terms[i].a) || !is_integer(terms[i].b)) {
        throw Error(ErrorKind::NonIntegerTerms, "term is not an integer pair", static_cast<long>(i) + 1);
      }
    }
  };

  if (cf.is_finite()) {
    // A finite fraction has a rational value; nothing to certify.
    check_integers(cf.prefix);
    rep.scan_limit = std::min(scan_limit, m);
    return rep;
  }

  const Tail& tail = *cf.tail;
  long limit = std::max(scan_limit, m + 1);
  rep.scan_limit = limit;
  if (tail.a.is_zero()) {
    throw Error(ErrorKind::ZeroPartialNumerator, "tail numerator is identically zero", m + 1);
  }
  if (!integer_valued(tail.a) || !integer_valued(tail.b)) {
    check_integers(realize_terms(cf, limit));
    return rep;
  }

  // Past the root bounds the sign of a and of the margin D are fixed.
  const int s = sgn(leading_coefficient(tail.a));
  const RationalFunction D = s > 0 ? tail.b - tail.a : tail.b + tail.a - RationalFunction::constant(1);
  rep.method = TietzeReport::Method::AsymptoticPlusScan;
  if (!D.is_zero() && sgn(leading_coefficient(D)) < 0) return rep;

  Integer last_arg = std::max(root_bound(tail.a), D.is_zero() ? Integer(0) : root_bound(D)) + 1;
  last_arg = std::max(last_arg, Integer(tail.start_index));
  const Integer last_pos = m + (last_arg - tail.start_index) + 1;
  if (last_pos > kMaxTietzeScan) {
    rep.method = TietzeReport::Method::ScanOnly;
    return rep;
  }
  limit = std::max(limit, last_pos.get_si());
  rep.scan_limit = limit;

  const auto terms = realize_terms(cf, limit + 1);
  check_integers(terms);
  long last_failure = 0;
  for (long n = 1; n <= limit; ++n) {
    const Term& t = terms[static_cast<std::size_t>(n - 1)];
    const Rational& next_a = terms[static_cast<std::size_t>(n)].a;
    Rational need = abs(t.a);
    if (sgn(next_a) < 0) need += 1;
    if (t.b < need) last_failure = n;
  }
  rep.holds = true;
  rep.N0 = last_failure + 1;
  return rep;
}

// ---- Growth -------------------------------------------------------------------

std::string to_string(GrowthBound::Kind k) {
  return k == GrowthBound::Kind::FactorialPower ? "FactorialPower" : "GoldenRatio";
}

GrowthBound growth_diagnostics(const CFSpec& cf, long N, const Rational& epsilon, long precision_bits) {
  if (N < 1) throw Error(ErrorKind::EmptyRange, "growth diagnostics need N >= 1");
  if (sgn(epsilon) <= 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  const auto terms = realize_terms(cf, N);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].a < 1 || terms[i].b < 1) {
      throw Error(ErrorKind::HypothesisViolation, "growth facts need a_n, b_n >= 1",
                  static_cast<long>(i) + 1);
    }
  }

  GrowthBound g;
  g.epsilon = epsilon;
  g.terms = N;
  const long bits = precision_bits;
  g.phi = (Real::from_int(1, bits) + sqrt(Real::from_int(5, bits))) / Real::from_int(2, bits);
  const bool factorial = cf.tail && cf.tail->a.is_polynomial() && cf.tail->b.is_polynomial() &&
                         degree(cf.tail->a) >= Degree(1) && degree(cf.tail->b) >= Degree(1);
  Real ratio(bits);
  if (factorial) {
    g.kind = GrowthBound::Kind::FactorialPower;
    g.k = degree(cf.tail->b).value();
    g.D = leading_coefficient(cf.tail->b);
    Rational r = abs(g.D) / (1 + epsilon);
    ratio = Real::from_rational(r, bits);
  } else {
    g.kind = GrowthBound::Kind::GoldenRatio;
    g.D = 0;
    ratio = g.phi;
  }

  ConvergentCursor cursor(cf);
  Real bound = Real::from_int(1, bits);
  std::optional<Real> best;
  for (long n = 1; n <= N; ++n) {
    cursor.advance(terms[static_cast<std::size_t>(n - 1)]);
    bound *= ratio;
    if (factorial) bound *= pow(Real::from_int(n, bits), static_cast<unsigned long>(g.k));
    Real c = Real::from_rational(cursor.current().B, bits) / bound;
    if (!best || c < *best) best = c;
  }
  g.C = *best;
  return g;
}

// ---- Reference constants ------------------------------------------------------------

namespace {

// Working precision: requested bits plus guard bits for truncation errors.
long working_bits(long bits) { return bits + 32 + static_cast<long>(std::log2(static_cast<double>(bits))); }

Real fixed_to_real(const Integer& v, long w, long bits) {
  const long exact = std::max(bits, static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)));
  Real r = Real::from_integer(v, exact).scaled(-w);
  r.round_to(bits);
  return r;
}

// 2^w arctan(1/x), truncating each term.
Integer arctan_inverse(long x, long w) {
  const Integer x2 = Integer(x) * x;
  Integer power = (Integer(1) << static_cast<mp_bitcnt_t>(w)) / x;
  Integer sum = power;
  for (long k = 1; power != 0; ++k) {
    power /= x2;
    const Integer t = power / (2 * k + 1);
    if (k % 2) sum -= t;
    else sum += t;
  }
  return sum;
}

Real pi_machin(long bits) {
  const long w = working_bits(bits);
  const Integer quarter = 4 * arctan_inverse(5, w) - arctan_inverse(239, w);
  return fixed_to_real(4 * quarter, w, bits);
}

Real e_series(long bits) {
  const long w = working_bits(bits);
  Integer term = Integer(1) << static_cast<mp_bitcnt_t>(w);
  Integer sum = term;
  for (long k = 1; term != 0; ++k) {
    term /= k;
    sum += term;
  }
  return fixed_to_real(sum, w, bits);
}

// Bernoulli numbers B_0..B_m (B_1 = -1/2), grown on demand.
const std::vector<Rational>& bernoulli(std::size_t m) {
  static std::mutex mu;
  static std::vector<Rational> b{Rational(1)};
  std::lock_guard lock(mu);
  while (b.size() <= m) {
    const std::size_t n = b.size();
    Rational sum(0);
    Integer binom = 1;  // C(n+1, j)
    for (std::size_t j = 0; j < n; ++j) {
      sum += binom * b[j];
      binom = binom * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    Rational next = -sum / static_cast<unsigned long>(n + 1);
    next.canonicalize();
    b.push_back(next);
  }
  return b;
}

// sum_{n < N} n^-k + N^(1-k)/(k-1) + N^-k/2 + sum_j B_2j/(2j)! k(k+1)..(k+2j-2) N^(-k-2j+1).
Real zeta_em(long k, long bits) {
  const long w = working_bits(bits);
  const long N = std::max(16L, w / 4 + 16);
  Real sum(w);
  for (long n = N - 1; n >= 1; --n) {
    sum += Real::from_int(1, w) / pow(Real::from_int(n, w), static_cast<unsigned long>(k));
  }
  const Real Nr = Real::from_int(N, w);
  const Real Nk = pow(Nr, static_cast<unsigned long>(k));
  sum += Nr / (Nk * Real::from_int(k - 1, w));
  sum += Real::from_int(1, w) / (Nk * Real::from_int(2, w));

  const Real N2 = Nr * Nr;
  Real inv = Real::from_int(1, w) / (Nk / Nr);  // N^(1-k), times N^-2 per step
  Rational coeff(k);                             // k(k+1)..(k+2j-2) / (2j)!
  coeff /= 2;
  const Real cutoff = Real::from_int(1, w).scaled(-(w + 4));
  for (std::size_t j = 1;; ++j) {
    inv /= N2;
    if (j > 1) {
      const long lo = k + 2 * static_cast<long>(j) - 3;
      coeff *= Rational(lo * (lo + 1));
      coeff /= Rational(static_cast<long>((2 * j - 1) * (2 * j)));
    }
    const Real term = Real::from_rational(bernoulli(2 * j)[2 * j] * coeff, w) * inv;
    sum += term;
    if (abs(term) < cutoff) break;
    if (j > 4 * static_cast<std::size_t>(w)) {
      throw Error(ErrorKind::UnsupportedConstant, "zeta tail did not converge");
    }
  }
  sum.round_to(bits);
  return sum;
}

Real root_newton(const NamedConstant& c, long bits) {
  if (c.s <= 0 || c.q == 0 || sgn(c.p) * sgn(c.q) <= 0) {
    throw Error(ErrorKind::UnsupportedConstant, "root needs p/q > 0 and s > 0");
  }
  const long w = working_bits(bits);
  Rational base(c.p, c.q);
  base.canonicalize();
  if (c.r < 0) base = 1 / base;
  Rational target(1);
  for (long i = 0; i < std::abs(c.r); ++i) target *= base;
  const Real T = Real::from_rational(target, w);
  if (c.s == 1) {
    Real out = T;
    out.round_to(bits);
    return out;
  }
  const auto s = static_cast<unsigned long>(c.s);
  // Seed from the binary exponent, then Newton: y -= (y^s - T) / (s y^(s-1)).
  Real y = Real::from_int(1, w).scaled(T.exponent() / c.s);
  const Real S = Real::from_int(c.s, w);
  for (int iter = 0; iter < 10000; ++iter) {
    const Real ys1 = pow(y, s - 1);
    const Real step = (ys1 * y - T) / (S * ys1);
    y -= step;
    if (step.is_zero() || abs(step) < abs(y).scaled(-(w - 2))) break;
  }
  y.round_to(bits);
  return y;
}

Real sine_product(long m, long bits) {
  if (m < 1) throw Error(ErrorKind::UnsupportedConstant, "sine product needs m >= 1");
  if (m == 1) return Real(bits);  // sin(pi) = 0
  const long w = working_bits(bits);
  const Real pi = pi_machin(w);
  const Real x = pi / Real::from_int(m, w);
  const Real x2 = x * x;
  Real term = x, sum = x;
  const Real cutoff = Real::from_int(1, w).scaled(-(w + 4));
  for (long k = 1; abs(term) >= cutoff; ++k) {
    term = -term * x2 / Real::from_int((2 * k) * (2 * k + 1), w);
    sum += term;
  }
  Real out = Real::from_int(m, w) * sum / pi;
  out.round_to(bits);
  return out;
}

Real compute_constant(const NamedConstant& c, long bits) {
  using K = NamedConstant::Kind;
  switch (c.kind) {
    case K::PiOver4: return pi_machin(bits).scaled(-2);
    case K::BrounckerPi: {
      Real v = Real::from_int(4, bits + 8) / pi_machin(bits + 8);
      v.round_to(bits);
      return v;
    }
    case K::E: return e_series(bits);
    case K::Zeta:
      if (c.k < 2) throw Error(ErrorKind::UnsupportedConstant, "zeta(k) needs k >= 2");
      return zeta_em(c.k, bits);
    case K::Root: return root_newton(c, bits);
    case K::SineProduct: return sine_product(c.m, bits);
  }
  throw Error(ErrorKind::UnsupportedConstant, "unknown constant");
}

struct ConstantCache {
  std::shared_mutex mu;
  std::map<std::pair<std::string, long>, Real> values;
  std::optional<std::filesystem::path> dir;
};

ConstantCache& cache() {
  static ConstantCache c;
  return c;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key, long bits) {
  std::string name;
  for (char ch : key) name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return dir / (name + "-" + std::to_string(bits) + ".hex");
}

std::optional<Real> load_cached(const std::filesystem::path& file, long bits) {
  std::ifstream in(file);
  std::string text;
  if (!in || !std::getline(in, text)) return std::nullopt;
  try {
    Real r = Real::from_string(text, bits, 16);
    if (r.to_hex() != text) return std::nullopt;
    return r;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void store_cached(const std::filesystem::path& dir, const std::filesystem::path& file, const Real& v) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::string>{}(file.string()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << v.to_hex() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

Real reference_constant(const NamedConstant& c, long precision_bits) {
  if (precision_bits < 64) throw Error(ErrorKind::InvalidArgument, "reference constants need >= 64 bits");
  auto& store = cache();
  const auto key = std::make_pair(to_string(c), precision_bits);
  std::optional<std::filesystem::path> dir;
  {
    std::shared_lock lock(store.mu);
    if (auto it = store.values.find(key); it != store.values.end()) return it->second;
    dir = store.dir;
  }
  std::optional<Real> value;
  if (dir) value = load_cached(cache_file(*dir, key.first, precision_bits), precision_bits);
  if (!value) {
    value = compute_constant(c, precision_bits);
    if (dir) store_cached(*dir, cache_file(*dir, key.first, precision_bits), *value);
  }
  std::unique_lock lock(store.mu);
  return store.values.try_emplace(key, *value).first->second;
}

void set_constant_cache_dir(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(cache().mu);
  cache().dir = std::move(dir);
}

std::optional<std::filesystem::path> constant_cache_dir_from_env() {
  const char* env = std::getenv("POLYCF_CONSTANT_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

void clear_constant_cache() {
  std::unique_lock lock(cache().mu);
  cache().values.clear();
}

// ---- Verification -------------------------------------------------------------------

std::string to_string(VerificationReport::Verdict v) {
  switch (v) {
    case VerificationReport::Verdict::Pass: return "Pass";
    case VerificationReport::Verdict::Fail: return "Fail";
    case VerificationReport::Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Real limit_value(const LimitClaim& claim, long precision_bits) {
  if (claim.kind == LimitClaim::Kind::ExactRational) return Real::from_rational(claim.value, precision_bits);
  return reference_constant(claim.constant, precision_bits);
}

VerificationReport verify_limit(const FamilyMember& member, long terms, long precision_bits, const Real& tol) {
  if (terms < 1) throw Error(ErrorKind::InvalidArgument, "terms must be positive");
  const long bits = std::max(precision_bits, 64L);
  VerificationReport rep;
  rep.id = member.id;
  rep.params = member.params;
  rep.terms = terms;
  rep.precision_bits = bits;
  rep.claimed = to_string(member.limit);
  rep.tolerance = tol;

  const LimitEstimate est = evaluate_at(member.cf, terms, bits, tol);
  rep.value = est.value;
  rep.oracle = limit_value(member.limit, bits);
  rep.abs_err = abs(rep.value - rep.oracle);
  rep.rel_err = rep.oracle.is_zero() ? rep.abs_err : rep.abs_err / abs(rep.oracle);
  const Real oracle_err = member.limit.kind == LimitClaim::Kind::ExactRational
                              ? Real(bits)
                              : abs(rep.oracle).scaled(4 - bits);
  rep.error_bound = est.error_bound + oracle_err;

  // A discrepancy beyond the last step only refutes the claim once the
  // evaluation itself has settled below tol.
  if (rep.abs_err <= tol || rep.abs_err <= rep.error_bound) rep.verdict = VerificationReport::Verdict::Pass;
  else if (est.error_bound > tol) rep.verdict = VerificationReport::Verdict::Inconclusive;
  else rep.verdict = VerificationReport::Verdict::Fail;
  return rep;
}

}  // namespace polycf
