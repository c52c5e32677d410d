#include "doctest.h"
#include "polycf/errors.hpp"
#include "polycf/generators.hpp"
#include "polycf/transforms.hpp"
#include "support.hpp"

using namespace polycf;
using namespace polycf::testing;

namespace {

RationalFunction P(const char* text) { return parse_ratfn(text); }
RationalFunction K(const Rational& c) { return RationalFunction::constant(c); }

std::pair<ErrorKind, std::optional<long>> error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.kind(), e.index()};
  }
  FAIL("expected an Error");
  return {ErrorKind::InvalidArgument, std::nullopt};
}

void same_approximants(const CFSpec& a, const CFSpec& b, long N) {
  auto x = approximants(a, N), y = approximants(b, N);
  for (long n = 0; n <= N; ++n) {
    CAPTURE(n);
    CHECK(x[n] == y[n]);
  }
}

Real limit_of(const CFSpec& cf, long terms) {
  return evaluate_at(cf, terms, 256, Real::from_string("1e-60", 256)).value;
}

bool close(const Real& v, const Rational& target, const char* tol) {
  return abs(v - Real::from_rational(target, 256)) < Real::from_string(tol, 256);
}

Rational pow_q(const Rational& x, long e) {
  Rational r(1);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

TEST_CASE("pincherle_family") {
  auto m = pincherle_family(P("n+2"), P("n+3"));
  CHECK(m.verified());
  CHECK(m.limit.kind == LimitClaim::Kind::ExactRational);
  CHECK(m.limit.value == 2);

  // Example display with b = n+3: (3 + 2 b_1)/b_1 + K_{n>=2} (n-1)(n+2+(n+1)b_n) / (n b_n).
  const auto b = P("n+3");
  const Rational b1 = b(1);
  CFSpec display{0, {{3 + 2 * b1, b1}},
                 Tail{(P("n-1")) * (P("n+2") + P("n+1") * b), P("n") * b, 2}};
  same_approximants(to_integer_cf(m.cf, 40), display, 40);
  auto ints = to_integer_cf(m.cf, 40);
  for (const auto& t : ints.prefix) CHECK(t.a.get_den() == 1);

  auto constant = pincherle_family(K(3), K(2));
  CHECK(constant.limit.value == 1);
  for (long n = 1; n <= 5; ++n) CHECK(term_at(constant.cf, n) == Term{3, 2});

  auto two = pincherle_family(P("n+2"), K(2));
  CHECK(close(limit_of(two.cf, 60), 2, "1e-8"));

  CHECK(error_of([] { pincherle_family(P("n+2"), K(1)); }).first == ErrorKind::HypothesisViolation);
  auto lenient = pincherle_family(P("n+2"), K(1), Check::Lenient);
  CHECK_FALSE(lenient.verified());
  CHECK(error_of([] { pincherle_family(P("n-3"), K(2)); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("pincherle_poly_family") {
  auto m = pincherle_poly_family(P("n^2+1"), K(1), P("n+2"), K(1));
  CHECK(m.verified());
  CHECK(m.limit.value == q(1, 2));
  // Example display: (c1+2)/(2c1) + K_{n>=2} (1+(n-3)^2)((1+(n-1)^2)c_n + 1+n^2) / ((1+(n-2)^2)c_n).
  const auto c = P("n+2");
  const Rational c1 = c(1);
  CFSpec display{0, {{c1 + 2, 2 * c1}},
                 Tail{P("1+(n-3)^2") * (P("1+(n-1)^2") * c + P("1+n^2")), P("1+(n-2)^2") * c, 2}};
  same_approximants(m.cf, display, 40);
  CHECK(close(limit_of(m.cf, 100), q(1, 2), "1e-8"));

  // c = d + 1 has equal degrees and equal leading coefficients, so the
  // degree condition fails; the limit claim is still 1.
  CHECK(error_of([] { pincherle_poly_family(P("n+5"), P("n+5"), P("n+2"), P("n+1")); }).first ==
        ErrorKind::HypothesisViolation);
  auto trivial = pincherle_poly_family(P("n+5"), P("n+5"), P("n+2"), P("n+1"), Check::Lenient);
  CHECK_FALSE(trivial.verified());
  CHECK(trivial.limit.value == 1);
  auto dominated = pincherle_poly_family(P("n+5"), P("n+5"), P("2n+2"), P("n+1"));
  CHECK(dominated.verified());
  CHECK(close(limit_of(dominated.cf, 100), 1, "1e-8"));

  CHECK(error_of([] { pincherle_poly_family(K(1), K(1), P("n+1"), P("n+2")); }).first ==
        ErrorKind::HypothesisViolation);
}

TEST_CASE("pincherle_ratio_one") {
  auto m = pincherle_ratio_one(P("n+3"));
  CHECK(m.verified());
  CHECK(m.limit.value == 1);
  CHECK(m.cf.prefix[0] == Term{3 + 16, 16});
  CHECK(term_at(m.cf, 2) == Term{3 * (4 + 25), 25});
  CHECK(close(limit_of(m.cf, 100), 1, "1e-8"));
  CHECK(error_of([] { pincherle_ratio_one(P("n+2")); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("family_pi") {
  for (long A = 1; A <= 5; ++A) {
    CAPTURE(A);
    auto f = K(A) * P("2n-1");
    auto m = family_pi(f);
    CHECK(m.verified());
    CHECK(m.cf.b0 == q(1, A));
    // Simplified display for f = A(2n-1).
    CFSpec display{q(1, A), {{1, 1}, {-(4 + A), 4 - 2 * A}},
                   Tail{P("(2n-3)(2n-5)") * (K(A) * P("2n-7") + P("4(n-3)")) *
                            (K(A) * P("2n-3") + P("4(n-1)")),
                        K(2 * A) * P("2n-5") + P("4(2n-3)"), 3}};
    same_approximants(m.cf, display, 40);
    // Approximant k is the Leibniz partial sum plus (-1)^(k-1)/f(k).
    auto ap = approximants(m.cf, 40);
    Rational S(0);
    for (long k = 0; k <= 40; ++k) {
      if (k > 0) S += q(k % 2 ? 1 : -1, 2 * k - 1);
      CHECK(*ap[k] == S + (k % 2 ? 1 : -1) / f(k));
    }
  }
  CHECK(error_of([] { family_pi(K(1)); }).first == ErrorKind::HypothesisViolation);
  CHECK(error_of([] { family_pi(P("n")); }).first == ErrorKind::DegenerateTerm);
  auto odd = family_pi(P("2n+1"));
  CHECK(odd.limit.constant == NamedConstant::pi_over_4());
}

TEST_CASE("family_zeta") {
  for (long k : {2L, 3L, 11L}) {
    for (long A = 1; A <= 3; ++A) {
      CAPTURE(k);
      CAPTURE(A);
      auto d = K(A) * P("n+1");
      auto m = family_zeta(k, d);
      CHECK(m.verified());
      const Rational two_k1 = pow_q(2, k - 1), two_k = pow_q(2, k);
      CFSpec display{q(1, A),
                     {{2 * A - 1, 2 * A}, {-2 * A * (3 * A - two_k1), 3 * A * (1 + two_k) - 2 * two_k}},
                     std::nullopt};
      const auto n = P("n"), nm1 = P("n-1"), nm2 = P("n-2");
      const auto uk = static_cast<unsigned>(k);
      display.tail = Tail{-n * nm1.pow(2 * uk - 1) * (K(A) * nm1 - nm2.pow(uk - 1)) *
                              (K(A) * P("n+1") - n.pow(uk - 1)),
                          K(A) * P("n+1") * (nm1.pow(uk) + n.pow(uk)) - K(2) * n.pow(uk) * nm1.pow(uk - 1),
                          3};
      same_approximants(m.cf, display, 30);
      auto ap = approximants(m.cf, 30);
      Rational S(0);
      for (long j = 0; j <= 30; ++j) {
        if (j > 0) S += 1 / pow_q(j, k);
        CHECK(*ap[j] == S + 1 / d(j));
      }
    }
  }
  auto m11 = family_zeta(11, P("n+1"));
  CHECK(m11.cf.prefix[1].a == -2 * (3 - 1024));
  CHECK(error_of([] { family_zeta(1, P("n+1")); }).first == ErrorKind::InvalidArgument);
  CHECK(error_of([] { family_zeta(2, K(3)); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("family_binomial") {
  const Rational alpha(1, 5), x(5, 7);
  for (long A = 1; A <= 3; ++A) {
    CAPTURE(A);
    auto r = K(A) * P("n") - K(1);
    auto m = family_binomial(alpha, x, r);
    CHECK(m.verified());
    CHECK(m.limit.constant == NamedConstant::root(q(12, 7), q(1, 5)));
    CFSpec display{0, {{A + 7, 7}, {7 * (11 * A - 7), -4 * A + 56}},
                   Tail{P("7(5n-11)(n-2)") * (P("12n-37") * K(A) - K(7)) * (P("12n-13") * K(A) - K(7)),
                        K(-2 * A) * P("12n^2-31n+16") + P("14(2+n)"), 3}};
    same_approximants(m.cf, display, 30);
    auto ap = approximants(m.cf, 30);
    Rational S(0), t(1);
    for (long n = 0; n <= 30; ++n) {
      if (n > 0) t *= (alpha - n + 1) * x / n;
      S += t;
      CHECK(*ap[n] == S + t * r(n));
    }
  }
  // alpha = 1 truncates the series; g_2 vanishes.
  CHECK(error_of([] { family_binomial(1, q(1, 2), K(0)); }) ==
        std::pair{ErrorKind::DegenerateTerm, std::optional<long>(2)});
  auto finite = family_binomial(1, q(1, 2), K(0), Check::Lenient);
  CHECK_FALSE(finite.verified());
  CHECK(finite.cf.is_finite());
  CHECK(approximants(finite.cf, 1).entries.back().value == q(3, 2));
  CHECK(error_of([] { family_binomial(q(1, 2), 1, K(0)); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("family_sin_product") {
  for (long A : {-1L, 0L, 1L, 5L}) {
    CAPTURE(A);
    auto m = family_sin_product(3, A);
    CHECK(m.verified());
    CFSpec display{1 + A, {{-10 * A - 2, 18}, {2736 * A + 432, -692 * A - 132}},
                   Tail{K(9) * P("n(1-n)(3n-2)(3n-4)") * (K(1 + 9 * A) * P("n") + K(A + 1)) *
                            (K(1 + 9 * A) * P("n") - K(17 * A + 1)),
                        P("(9n^2-1)(9(n-1)^2-1)") * (K(A) + P("n+1")) -
                            P("81n^2(n^2-1)") * (K(A) + P("n-1")),
                        3}};
    same_approximants(m.cf, display, 30);
    auto ap = approximants(m.cf, 30);
    Rational prod(1);
    for (long n = 0; n <= 30; ++n) {
      if (n > 0) prod *= 1 - q(1, 9 * n * n);
      CHECK(*ap[n] == (1 + Rational(A, n + 1)) * prod);
    }
  }
  auto zero = family_sin_product(3, 0);
  CHECK(zero.cf.b0 == 1);
  CHECK(zero.cf.prefix[0] == Term{-2, 18});
  CHECK(zero.cf.prefix[1] == Term{432, -132});
  CHECK(family_sin_product(2, 1).limit.constant == NamedConstant::sine_product(2));
  CHECK(error_of([] { family_sin_product(1, 0); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("family_e_bauer_muir") {
  auto m = family_e_bauer_muir(0);
  CHECK(m.cf.b0 == 2);
  CHECK(m.cf.prefix == std::vector<Term>{{1, 1}, {1, 2}, {2, 3}});
  CHECK(term_at(m.cf, 4) == Term{3, 4});
  for (long A = 0; A <= 3; ++A) {
    CAPTURE(A);
    auto member = family_e_bauer_muir(A);
    CHECK(member.verified());
    std::vector<Rational> w{0};
    for (long n = 1; n <= 21; ++n) w.emplace_back(A * (n + 1));
    auto bm = bauer_muir(e_cf(), w, 21);
    same_approximants(member.cf, bm.cf, 20);
  }
  CHECK(error_of([] { family_e_bauer_muir(-1); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("family_bml02") {
  auto m = family_bml02(K(1), 1);
  CHECK(m.limit.value == 7);
  // a_n, b_n straight from the closed form at n = 2, f = 1, m = 1.
  CHECK(term_at(m.cf, 2) == Term{(4 + 6 + 2) * 2 + 1 + 8 + 12 + 4 - 1, (4 - 1) * 2 + 1 + 6 - 2});
  CHECK(close(limit_of(m.cf, 100), 7, "1e-8"));
  auto m2 = family_bml02(P("n^2"), 2);
  CHECK(m2.limit.value == 13);
  CHECK(close(limit_of(m2.cf, 80), 13, "1e-8"));
  CHECK(error_of([] { family_bml02(P("n-5"), 1); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("ramanujan_entry13") {
  auto m = ramanujan_entry13(1, 1, 1);
  CHECK(m.hypotheses.front().name.find("(ii)") != std::string::npos);
  CFSpec display{0, {{1, 3}, {-4, 5}, {-9, 7}, {-16, 9}}, std::nullopt};
  same_approximants(truncate(m.cf, 4), display, 4);

  auto iii = ramanujan_entry13(1, 2, 0);
  CHECK(iii.verified());
  CHECK(iii.limit.value == 1);
  CHECK(close(limit_of(iii.cf, 200), 1, "1e-30"));

  // Branch (i) converges algebraically, faster for larger (b-a)/d.
  auto i = ramanujan_entry13(1, 5, 1);
  CHECK(i.hypotheses.front().name.find("(i)") != std::string::npos);
  CHECK(close(limit_of(i.cf, 400), 1, "1e-6"));

  // (a-b)/d > 0: the misprinted sign is rejected.
  CHECK(error_of([] { ramanujan_entry13(3, 1, 1); }).first == ErrorKind::HypothesisViolation);
  // b = -2d.
  CHECK(error_of([] { ramanujan_entry13(-5, -2, 1); }).first == ErrorKind::HypothesisViolation);
  CHECK(error_of([] { ramanujan_entry13(2, 1, 0); }).first == ErrorKind::HypothesisViolation);
}

TEST_CASE("presets") {
  CHECK(preset_ids().size() == 12);
  for (const auto& id : preset_ids()) {
    CAPTURE(id);
    auto m = make_preset(id);
    CHECK(m.id == id);
    CHECK(m.verified());
    CHECK(m.params == preset_defaults(id));
  }
  auto z = make_preset("ex3.4", {{"k", "3"}, {"A", "2"}});
  CHECK(z.params.at("k") == "3");
  CHECK(z.limit.constant == NamedConstant::zeta(3));
  CHECK(error_of([] { make_preset("nope"); }).first == ErrorKind::InvalidArgument);
  CHECK(error_of([] { make_preset("ex3.4", {{"q", "1"}}); }).first == ErrorKind::InvalidArgument);
  CHECK(error_of([] { make_preset("ex3.4", {{"k", "x"}}); }).first == ErrorKind::MalformedInput);
  CHECK(error_of([] { make_preset("ex3.3", {{"A", "1/2"}}); }).first == ErrorKind::MalformedInput);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK(parse_rational("+7") == 7);
  for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/0", "--1"}) {
    CHECK(error_of([&] { parse_rational(bad); }).first == ErrorKind::MalformedInput);
  }
}

TEST_CASE("parse_constant inverts to_string") {
  for (const auto& c : {NamedConstant::pi_over_4(), NamedConstant::e(), NamedConstant::brouncker_pi(),
                        NamedConstant::zeta(11), NamedConstant::sine_product(3),
                        NamedConstant::root(q(12, 7), q(1, 5)), NamedConstant::root(q(2, 3), q(-3, 2))}) {
    CHECK(parse_constant(to_string(c)) == c);
  }
  for (const char* bad : {"pi", "zeta()", "zeta(x)", "root(1,2)", "sine_product(1", "gamma(2)"}) {
    CAPTURE(bad);
    CHECK(error_of([&] { parse_constant(bad); }).first == ErrorKind::MalformedInput);
  }
}
