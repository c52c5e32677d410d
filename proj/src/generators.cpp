#include "polycf/generators.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>

namespace polycf {

namespace {

RationalFunction N() { return RationalFunction::variable(); }
RationalFunction C(const Rational& c) { return RationalFunction::constant(c); }
RationalFunction C(long c) { return RationalFunction::constant(Rational(c)); }

Rational at(const RationalFunction& r, long n) { return r(n); }

std::optional<long> to_index(const std::optional<Integer>& n) {
  if (!n) return std::nullopt;
  return n->fits_slong_p() ? n->get_si() : LONG_MAX;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

// Collects hypotheses and applies the strict / lenient policy.
class Builder {
 public:
  Builder(std::string id, Params params) {
    m_.id = std::move(id);
    m_.params = std::move(params);
  }

  void require(std::string name, bool holds, ErrorKind kind = ErrorKind::HypothesisViolation,
               std::optional<long> index = std::nullopt) {
    m_.hypotheses.push_back({std::move(name), holds, holds ? std::nullopt : index, kind});
  }

  // r(n) != 0 for n >= from, recording the first zero.
  void require_nonzero(std::string name, const RationalFunction& r, long from, ErrorKind kind) {
    const auto zero = to_index(first_zero_from(r, from));
    require(std::move(name), !zero, kind, zero);
  }

  // Conditions without which the fraction cannot be written down at all.
  static void construct_if(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::DegenerateTerm, what);
  }

  FamilyMember finish(CFSpec cf, LimitClaim limit, Check check) {
    m_.cf = std::move(cf);
    m_.limit = std::move(limit);
    check_numerators();
    if (check == Check::Strict) {
      for (const auto& h : m_.hypotheses) {
        if (!h.holds) throw Error(h.failure_kind, "hypothesis failed: " + h.name, h.first_failure);
      }
    } else if (zero_numerator_) {
      m_.cf = truncate(m_.cf, *zero_numerator_ - 1);
    }
    return std::move(m_);
  }

 private:
  void check_numerators() {
    const auto& cf = m_.cf;
    for (std::size_t i = 0; i < cf.prefix.size() && !zero_numerator_; ++i) {
      if (sgn(cf.prefix[i].a) == 0) zero_numerator_ = static_cast<long>(i) + 1;
    }
    if (!zero_numerator_ && cf.tail) {
      if (auto n = to_index(first_zero_from(cf.tail->a, cf.tail->start_index))) {
        zero_numerator_ = static_cast<long>(cf.prefix.size()) + (*n - cf.tail->start_index) + 1;
      }
    }
    require("partial numerators a_n != 0", !zero_numerator_, ErrorKind::DegenerateTerm,
            zero_numerator_);
  }

  FamilyMember m_;
  std::optional<long> zero_numerator_;
};

bool degree_dominates(const RationalFunction& c, const RationalFunction& d) {
  if (c.is_zero()) return false;
  if (degree(c) != degree(d)) return degree(c) > degree(d);
  return leading_coefficient(c) > leading_coefficient(d);
}

}  // namespace

NamedConstant NamedConstant::zeta(long k) {
  NamedConstant c{Kind::Zeta};
  c.k = k;
  return c;
}

NamedConstant NamedConstant::root(const Rational& base, const Rational& exponent) {
  if (sgn(base) <= 0) throw Error(ErrorKind::InvalidArgument, "root of a non-positive base");
  if (!exponent.get_num().fits_slong_p() || !exponent.get_den().fits_slong_p()) {
    throw Error(ErrorKind::InvalidArgument, "exponent too large");
  }
  NamedConstant c{Kind::Root};
  c.p = base.get_num();
  c.q = base.get_den();
  c.r = exponent.get_num().get_si();
  c.s = exponent.get_den().get_si();
  return c;
}

NamedConstant NamedConstant::sine_product(long m) {
  NamedConstant c{Kind::SineProduct};
  c.m = m;
  return c;
}

std::string to_string(const NamedConstant& c) {
  using K = NamedConstant::Kind;
  switch (c.kind) {
    case K::PiOver4: return "pi/4";
    case K::E: return "e";
    case K::Zeta: return "zeta(" + std::to_string(c.k) + ")";
    case K::Root:
      return "root(" + c.p.get_str() + "," + c.q.get_str() + "," + std::to_string(c.r) + "," +
             std::to_string(c.s) + ")";
    case K::SineProduct: return "sine_product(" + std::to_string(c.m) + ")";
    case K::BrounckerPi: return "4/pi";
  }
  return "?";
}

NamedConstant parse_constant(std::string_view text) {
  if (text == "pi/4") return NamedConstant::pi_over_4();
  if (text == "e") return NamedConstant::e();
  if (text == "4/pi") return NamedConstant::brouncker_pi();
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw Error(ErrorKind::MalformedInput, "unknown constant \"" + std::string(text) + "\"");
  }
  const std::string_view name = text.substr(0, open);
  std::vector<std::string_view> args;
  std::string_view rest = text.substr(open + 1, text.size() - open - 2);
  for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos; rest.remove_prefix(comma + 1)) {
    args.push_back(rest.substr(0, comma));
  }
  args.push_back(rest);
  if (name == "zeta" && args.size() == 1) return NamedConstant::zeta(parse_long(args[0]));
  if (name == "sine_product" && args.size() == 1) return NamedConstant::sine_product(parse_long(args[0]));
  if (name == "root" && args.size() == 4) {
    const Rational p = parse_rational(args[0]), q = parse_rational(args[1]);
    const long r = parse_long(args[2]), s = parse_long(args[3]);
    if (q == 0 || s == 0) throw Error(ErrorKind::MalformedInput, "root with a zero denominator");
    return NamedConstant::root(p / q, Rational(r) / s);
  }
  throw Error(ErrorKind::MalformedInput, "unknown constant \"" + std::string(text) + "\"");
}

std::string to_string(const LimitClaim& c) {
  return c.kind == LimitClaim::Kind::ExactRational ? rational_text(c.value) : to_string(c.constant);
}

bool FamilyMember::verified() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

FamilyMember pincherle_family(const RationalFunction& H, const RationalFunction& b, Check check) {
  Builder out("pincherle", {{"H", to_string(H)}, {"b", to_string(b)}});
  out.require("H(n) > 0 for n >= -1", eventually_positive(H, -1));
  out.require("b(n) > 0 for n >= 1", eventually_positive(b, 1));
  out.require("degree(b) > 0 or leading coefficient of b > 1",
              !b.is_zero() && (degree(b) > Degree(0) || leading_coefficient(b) > 1));
  const Rational h_prev = at(H, -1);
  Builder::construct_if(sgn(h_prev) != 0, "H(-1) = 0");
  CFSpec cf{0, {}, Tail{(H + b * H.shifted(-1)) / H.shifted(-2), b, 1}};
  return out.finish(std::move(cf), LimitClaim::exact(at(H, 0) / h_prev), check);
}

FamilyMember pincherle_poly_family(const RationalFunction& f, const RationalFunction& g,
                                   const RationalFunction& c, const RationalFunction& d,
                                   Check check) {
  Builder out("pincherle_poly", {{"f", to_string(f)}, {"g", to_string(g)},
                                 {"c", to_string(c)}, {"d", to_string(d)}});
  out.require("f(n) g(n) > 0 for n >= -1", eventually_positive(f * g, -1));
  out.require("c(n) d(n) > 0 for n >= 0", eventually_positive(c * d, 0));
  out.require("degree(c) > degree(d), or equal degrees with lc(c) > lc(d)", degree_dominates(c, d));
  auto F = [&](long n) { return at(f, n); };
  auto G = [&](long n) { return at(g, n); };
  Builder::construct_if(sgn(G(0)) != 0 && sgn(F(-1)) != 0, "g(0) f(-1) = 0");

  CFSpec cf{0, {}, std::nullopt};
  cf.prefix.push_back({G(-1) * (at(d, 1) * F(1) * G(0) + at(c, 1) * F(0) * G(1)),
                       at(c, 1) * F(-1) * G(0) * G(1)});
  cf.prefix.push_back({at(d, 1) * F(-1) * G(0) * G(0) * (at(d, 2) * F(2) * G(1) + at(c, 2) * F(1) * G(2)),
                       at(c, 2) * F(0) * G(2)});
  cf.tail = Tail{d.shifted(-1) * f.shifted(-3) * g.shifted(-2) *
                     (d * f * g.shifted(-1) + c * f.shifted(-1) * g),
                 c * f.shifted(-2) * g, 3};
  return out.finish(std::move(cf), LimitClaim::exact(F(0) * G(-1) / (G(0) * F(-1))), check);
}

FamilyMember pincherle_ratio_one(const RationalFunction& c, Check check) {
  Builder out("pincherle_ratio_one", {{"c", to_string(c)}});
  out.require("c(n) >= 2 for n >= -1", eventually_nonnegative(c - C(2), -1));
  const Rational c1 = at(c, 1);
  CFSpec cf{0, {{at(c, 0) + c1 * c1, c1 * c1}},
            Tail{c.shifted(-2) * (c.shifted(-1) + c * c), c * c, 2}};
  return out.finish(std::move(cf), LimitClaim::exact(1), check);
}

FamilyMember family_pi(const RationalFunction& f, Check check) {
  Builder out("pi", {{"f", to_string(f)}});
  const RationalFunction odd = C(2) * N() - C(1);  // 2n - 1
  const RationalFunction fp = f.shifted(-1);
  const RationalFunction g = f * fp + odd * (f + fp);

  out.require("degree(f) >= 1", degree(f) >= Degree(1));
  out.require("f(n) > 0 for n >= 1", eventually_positive(f, 1));
  const Rational f0 = at(f, 0), f1 = at(f, 1), f2 = at(f, 2);
  Builder::construct_if(sgn(f0) != 0, "f(0) = 0");
  out.require_nonzero("g(n) != 0 for n >= 1", g, 1, ErrorKind::DegenerateTerm);

  CFSpec cf{-1 / f0, {}, std::nullopt};
  cf.prefix.push_back({at(g, 1), f1 * f0});
  cf.prefix.push_back({f0 * f0 * at(g, 2), 2 * f2 * f0 + 3 * (f2 - f0)});
  const RationalFunction odd2 = C(2) * N() - C(3);  // 2n - 3
  const RationalFunction f2b = f.shifted(-2);
  cf.tail = Tail{odd2 * odd2 * g.shifted(-2) * g, C(2) * f * f2b + odd * odd2 * (f - f2b), 3};
  return out.finish(std::move(cf), LimitClaim::named(NamedConstant::pi_over_4()), check);
}

FamilyMember family_zeta(long k, const RationalFunction& d, Check check) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "zeta family needs k >= 2");
  if (k > 4096) throw Error(ErrorKind::InvalidArgument, "k too large");
  Builder out("zeta", {{"k", std::to_string(k)}, {"d", to_string(d)}});
  const auto uk = static_cast<unsigned>(k);
  const RationalFunction nk = N().pow(uk);
  const RationalFunction nk1 = (N() - C(1)).pow(uk);  // (n-1)^k
  const RationalFunction g = d * d.shifted(-1) + nk * (d.shifted(-1) - d);

  out.require("degree(d) >= 1", degree(d) >= Degree(1));
  const Rational d0 = at(d, 0), d1 = at(d, 1), d2 = at(d, 2);
  Builder::construct_if(sgn(d0) != 0, "d(0) = 0");
  out.require_nonzero("d(n) != 0 for n >= 0", d, 0, ErrorKind::HypothesisViolation);
  out.require_nonzero("g(n) != 0 for n >= 1", g, 1, ErrorKind::DegenerateTerm);

  Rational two_k;
  mpz_ui_pow_ui(two_k.get_num_mpz_t(), 2, static_cast<unsigned long>(k));

  CFSpec cf{1 / d0, {}, std::nullopt};
  cf.prefix.push_back({at(g, 1), d0 * d1});
  cf.prefix.push_back({-d0 * d0 * at(g, 2), d2 * d0 * (1 + two_k) + two_k * (d0 - d2)});
  const RationalFunction d2b = d.shifted(-2);
  cf.tail = Tail{-(nk1 * nk1) * g.shifted(-2) * g,
                 d * d2b * (nk1 + nk) + nk1 * nk * (d2b - d), 3};
  return out.finish(std::move(cf), LimitClaim::named(NamedConstant::zeta(k)), check);
}

FamilyMember family_binomial(const Rational& alpha, const Rational& x, const RationalFunction& r,
                             Check check) {
  Builder out("binomial", {{"alpha", rational_text(alpha)}, {"x", rational_text(x)}, {"r", to_string(r)}});
  out.require("|x| < 1", abs(x) < 1);
  const RationalFunction A = C(alpha), X = C(x), one = C(1);
  // g(n) = (alpha - n + 1) x (1 + r(n)) - n r(n-1)
  const RationalFunction g = (A - N() + one) * X * (one + r) - N() * r.shifted(-1);
  out.require_nonzero("g(n) != 0 for n >= 1", g, 1, ErrorKind::DegenerateTerm);

  const Rational r0 = at(r, 0), r2 = at(r, 2);
  CFSpec cf{1 + r0, {}, std::nullopt};
  cf.prefix.push_back({at(g, 1), 1});
  cf.prefix.push_back({-alpha * x * at(g, 2), alpha * x * ((alpha - 1) * x * (1 + r2) + 2) - 2 * r0});
  const RationalFunction shift2 = A - N() + C(2);  // alpha - n + 2
  cf.tail = Tail{-(N() - one) * X * shift2 * g.shifted(-2) * g,
                 shift2 * X * ((A - N() + one) * X * (one + r) + N()) - N() * (N() - one) * r.shifted(-2), 3};
  const Rational base = 1 + x;
  if (sgn(base) <= 0) throw Error(ErrorKind::HypothesisViolation, "hypothesis failed: |x| < 1");
  return out.finish(std::move(cf), LimitClaim::named(NamedConstant::root(base, alpha)), check);
}

FamilyMember family_sin_product(long m, const Integer& A, Check check) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be a positive integer");
  if (m > 1000000) throw Error(ErrorKind::InvalidArgument, "m too large");
  Builder out("sin_product", {{"m", std::to_string(m)}, {"A", A.get_str()}});
  const Rational m2(m * m);
  const RationalFunction M2 = C(m2), AA = C(Rational(A)), one = C(1);
  out.require("m >= 2 (factors 1 - 1/(m n)^2 nonzero)", m >= 2);
  // Perturbed product: a_n = 1 - 1/(m n)^2, b_n = 1 + A/(n+1).
  const RationalFunction factor = one - one / (M2 * N() * N());
  const RationalFunction pert = one + AA / (N() + one);
  out.require_nonzero("a_n b_n - b_(n-1) != 0 for n >= 1", factor * pert - pert.shifted(-1), 1,
                      ErrorKind::DegenerateTerm);

  const RationalFunction g = (M2 * N() + one) * AA + (N() + one);
  const RationalFunction u = M2 * N() * N() - one;  // m^2 n^2 - 1
  const RationalFunction h = u * u.shifted(-1) * (AA + N() + one) -
                             M2 * M2 * N() * N() * (N() * N() - one) * (AA + N() - one);
  const Rational a(A);
  CFSpec cf{1 + a, {}, std::nullopt};
  cf.prefix.push_back({(m2 - 1) * (a + 2) - 2 * m2 * (a + 1), 2 * m2});
  cf.prefix.push_back({2 * m2 * (m2 - 1) * at(g, 2), at(h, 2)});
  cf.tail = Tail{-N() * (N() - one) * M2 * u.shifted(-1) * g.shifted(-2) * g, h, 3};
  return out.finish(std::move(cf), LimitClaim::named(NamedConstant::sine_product(m)), check);
}

FamilyMember family_e_bauer_muir(const Integer& A, Check check) {
  Builder out("e_bauer_muir", {{"A", A.get_str()}});
  out.require("A >= 0", A >= 0);
  const Rational a(A);
  const RationalFunction AA = C(a), one = C(1);
  const RationalFunction s = AA * (one + AA);  // A(1+A)
  // a_n - w_{n-1}(b_n + w_n) for the e fraction with w_n = A(n+1).
  const RationalFunction margin = (N() + one) * (one - N() * s);
  out.require_nonzero("a_n - w_(n-1)(b_n + w_n) != 0 for n >= 1", margin, 1,
                      ErrorKind::TransformDoesNotExist);

  const Rational sa = a * (1 + a);
  CFSpec cf{2, {}, std::nullopt};
  cf.prefix.push_back({1, 1 + a});
  cf.prefix.push_back({1 - 2 * sa, 2 * (1 + a)});
  cf.prefix.push_back({2 * (1 - 3 * sa), 3 - 5 * a - 6 * a * a});
  const RationalFunction nn1 = N() * (N() - one);  // n(n-1)
  cf.tail = Tail{(N() - one) * (one - N() * s) * (one - (N() - C(2)) * s),
                 N() - (nn1 - one) * AA - nn1 * AA * AA, 4};
  return out.finish(std::move(cf), LimitClaim::named(NamedConstant::e()), check);
}

FamilyMember family_bml02(const RationalFunction& f, long m, Check check) {
  Builder out("bml02", {{"f", to_string(f)}, {"m", std::to_string(m)}});
  out.require("m >= 1", m >= 1);
  out.require("f(n) >= 1 for n >= 1", eventually_nonnegative(f - C(1), 1));
  const RationalFunction M = C(m), n = N(), one = C(1);
  const RationalFunction a = f * ((n * n + C(3) * n + C(2)) * n * M + one) + C(2) * M * n * n +
                             C(6) * M * n + C(4) * M - one;
  const RationalFunction b = f * ((n * n - one) * n * M + one) + C(2) * (n * n - one) * M - C(2);
  CFSpec cf{0, {}, Tail{a, b, 1}};
  return out.finish(std::move(cf), LimitClaim::exact(Rational(6 * m + 1)), check);
}

FamilyMember ramanujan_entry13(const Rational& a, const Rational& b, const Rational& d, Check check) {
  Builder out("entry13", {{"a", rational_text(a)}, {"b", rational_text(b)}, {"d", rational_text(d)}});
  std::string branch;
  if (sgn(d) != 0) {
    // b = -k d for a non-negative integer k exactly when -b/d is one.
    const Rational ratio = -b / d;
    const bool excluded = ratio.get_den() == 1 && sgn(ratio) >= 0;
    if (!excluded && sgn((a - b) / d) < 0) branch = "branch (i): d != 0, b != -kd, (a-b)/d < 0";
    else if (a == b) branch = "branch (ii): d != 0 and a = b";
  } else if (abs(a) < abs(b)) {
    branch = "branch (iii): d = 0 and |a| < |b|";
  }
  const bool ok = !branch.empty();
  out.require(ok ? branch : "one of branches (i), (ii), (iii) holds", ok);

  const RationalFunction A = C(a), B = C(b), D = C(d), nm1 = N() - C(1);
  CFSpec cf{0, {{a * b, a + b + d}},
            Tail{-(A + nm1 * D) * (B + nm1 * D), A + B + (C(2) * N() - C(1)) * D, 2}};
  return out.finish(std::move(cf), LimitClaim::exact(a), check);
}

FamilyMember brouncker() {
  Builder out("brouncker", {});
  const RationalFunction odd = C(2) * N() - C(1);
  return out.finish(CFSpec{1, {}, Tail{odd * odd, C(2), 1}},
                    LimitClaim::named(NamedConstant::brouncker_pi()), Check::Strict);
}

FamilyMember e_fraction() {
  Builder out("e", {});
  return out.finish(CFSpec{2, {}, Tail{N(), N(), 2}}, LimitClaim::named(NamedConstant::e()),
                    Check::Strict);
}

Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? is_digits(body)
                      : is_digits(body.substr(0, slash)) && is_digits(body.substr(slash + 1));
  if (!ok) throw Error(ErrorKind::MalformedInput, "not a rational: \"" + std::string(text) + "\"");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  r.set_str(s, 10);
  if (sgn(r.get_den()) == 0) throw Error(ErrorKind::MalformedInput, "zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

long parse_long(std::string_view text) {
  const Rational r = parse_rational(text);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
    throw Error(ErrorKind::MalformedInput, "not a machine integer: \"" + std::string(text) + "\"");
  }
  return r.get_num().get_si();
}

namespace {

struct Preset {
  std::string id;
  Params defaults;
  std::function<FamilyMember(const Params&, Check)> build;
};

Integer parse_integer(const std::string& text) {
  const Rational r = parse_rational(text);
  if (r.get_den() != 1) throw Error(ErrorKind::MalformedInput, "not an integer: \"" + text + "\"");
  return r.get_num();
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"ex1.1", {{"f", "1"}, {"m", "1"}},
       [](const Params& p, Check c) { return family_bml02(parse_ratfn(p.at("f")), parse_long(p.at("m")), c); }},
      {"ex2.2", {{"b", "n+1"}},
       [](const Params& p, Check c) { return pincherle_family(parse_ratfn("n+2"), parse_ratfn(p.at("b")), c); }},
      {"ex2.4", {{"c", "n+2"}},
       [](const Params& p, Check c) {
         return pincherle_poly_family(parse_ratfn("n^2+1"), C(1), parse_ratfn(p.at("c")), C(1), c);
       }},
      {"ex2.5", {{"c", "n+3"}},
       [](const Params& p, Check c) { return pincherle_ratio_one(parse_ratfn(p.at("c")), c); }},
      {"ex3.3", {{"A", "1"}},
       [](const Params& p, Check c) {
         return family_pi(C(Rational(parse_integer(p.at("A")))) * parse_ratfn("2n-1"), c);
       }},
      {"ex3.4", {{"k", "11"}, {"A", "1"}},
       [](const Params& p, Check c) {
         return family_zeta(parse_long(p.at("k")), C(Rational(parse_integer(p.at("A")))) * parse_ratfn("n+1"), c);
       }},
      {"ex3.5", {{"A", "1"}},
       [](const Params& p, Check c) {
         const RationalFunction r = C(Rational(parse_integer(p.at("A")))) * N() - C(1);
         return family_binomial(Rational(1, 5), Rational(5, 7), r, c);
       }},
      {"ex4.2", {{"m", "3"}, {"A", "0"}},
       [](const Params& p, Check c) {
         return family_sin_product(parse_long(p.at("m")), parse_integer(p.at("A")), c);
       }},
      {"ex5.6", {{"A", "0"}},
       [](const Params& p, Check c) { return family_e_bauer_muir(parse_integer(p.at("A")), c); }},
      {"entry13", {{"a", "1"}, {"b", "1"}, {"d", "1"}},
       [](const Params& p, Check c) {
         return ramanujan_entry13(parse_rational(p.at("a")), parse_rational(p.at("b")),
                                  parse_rational(p.at("d")), c);
       }},
      {"brouncker", {}, [](const Params&, Check) { return brouncker(); }},
      {"e", {}, [](const Params&, Check) { return e_fraction(); }},
  };
  return table;
}

const Preset& find_preset(const std::string& id) {
  for (const auto& p : presets()) {
    if (p.id == id) return p;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown preset \"" + id + "\"");
}

}  // namespace

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& p : presets()) out.push_back(p.id);
    return out;
  }();
  return ids;
}

Params preset_defaults(const std::string& id) { return find_preset(id).defaults; }

FamilyMember make_preset(const std::string& id, const Params& params, Check check) {
  const Preset& preset = find_preset(id);
  Params merged = preset.defaults;
  for (const auto& [key, value] : params) {
    if (!merged.contains(key)) {
      throw Error(ErrorKind::InvalidArgument, "preset \"" + id + "\" has no parameter \"" + key + "\"");
    }
    merged[key] = value;
  }
  FamilyMember member = preset.build(merged, check);
  member.id = id;
  member.params = merged;
  return member;
}

}  // namespace polycf
