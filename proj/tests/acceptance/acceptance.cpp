// Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "polycf/analysis.hpp"
#include "polycf/errors.hpp"
#include "polycf/generators.hpp"
#include "polycf/transforms.hpp"
#include "support.hpp"

using namespace polycf;
using namespace polycf::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s %s %s (%s%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<std::optional<Rational>> values(const CFSpec& cf, long N) {
  const auto seq = approximants(cf, N);
  std::vector<std::optional<Rational>> out;
  for (const auto& e : seq.entries) out.push_back(e.value);
  return out;
}

std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_nonzero(rng, 30));
  return v;
}

Real value_at(const FamilyMember& m, long terms, long bits) {
  return evaluate_at(m.cf, terms, bits, Real::from_int(0, bits)).value;
}

Real pi(long bits) { return reference_constant(NamedConstant::pi_over_4(), bits).scaled(2); }

// |value - target| < tol, recorded with the observed error.
void within(Outcome& o, const Real& value, const Real& target, const char* tol, const std::string& what) {
  const Real err = abs(value - target);
  const bool ok = err < Real::from_string(tol, value.precision());
  if (!ok) o.detail << what << " err=" << err.to_decimal(3) << " tol=" << tol << "; ";
  o.pass = o.pass && ok;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(POLYCF_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main() {
  const long N60 = 60;

  criterion("1a", "series/product transforms reproduce their partial sums and products exactly", [&](Outcome& o) {
    std::mt19937_64 rng(1001);
    int inputs = 0;
    for (int trial = 0; trial < 200; ++trial) {
      // Euler: approximant n = a_0 + ... + a_n.
      SeriesSpec s{random_values(rng, N60 + 1), {}};
      auto ev = values(euler_from_series(s), N60);
      Rational sum = 0;
      for (long n = 0; n <= N60; ++n) {
        sum += s.terms[n];
        o.require(ev[n] && *ev[n] == sum, "euler n=" + std::to_string(n));
      }
      // Generalized Euler: approximant n = a_0 + ... + a_n + b_n.
      for (;;) {
        s.perturbation = random_values(rng, N60 + 1);
        try {
          auto gv = values(generalized_euler(s), N60);
          Rational partial = 0;
          for (long n = 0; n <= N60; ++n) {
            partial += s.terms[n];
            o.require(gv[n] && *gv[n] == partial + s.perturbation[n], "gen-euler n=" + std::to_string(n));
          }
          break;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegenerateTerm) throw;
        }
      }
      // Product: approximant n = a_1 ... a_n (approximant 0 is the empty product 1).
      // Admissible factors are different from 1.
      ProductSpec p{random_values(rng, N60), {}};
      for (auto& f : p.factors) {
        while (f == 1) f = random_nonzero(rng, 30);
      }
      auto pv = values(product_to_cf(p), N60);
      Rational prod = 1;
      for (long n = 0; n <= N60; ++n) {
        if (n > 0) prod *= p.factors[n - 1];
        o.require(pv[n] && *pv[n] == prod, "product n=" + std::to_string(n));
      }
      // Generalized product: approximant n = b_n a_1 ... a_n.
      for (;;) {
        p.perturbation = random_values(rng, N60 + 1);
        try {
          auto gp = values(generalized_product(p), N60);
          Rational partial = 1;
          for (long n = 0; n <= N60; ++n) {
            if (n > 0) partial *= p.factors[n - 1];
            o.require(gp[n] && *gp[n] == p.perturbation[n] * partial, "gen-product n=" + std::to_string(n));
          }
          break;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegenerateTerm) throw;
        }
      }
      // Bernoulli: approximant n = K_n for sequences without repeated neighbours.
      std::vector<Rational> K{random_nonzero(rng, 30)};
      while (static_cast<long>(K.size()) <= N60) {
        Rational next = random_nonzero(rng, 30);
        if (next != K.back()) K.push_back(next);
      }
      auto bv = values(bernoulli_from_sequence(K), N60);
      for (long n = 0; n <= N60; ++n) o.require(bv[n] && *bv[n] == K[n], "bernoulli n=" + std::to_string(n));
      inputs += 5;
    }
    o.detail << inputs << " inputs, n <= 60; ";
  });

  criterion("1b", "even/odd parts carry (A_2k, B_2k) and (A_2k+1, B_2k+1)", [&](Outcome& o) {
    std::mt19937_64 rng(1002);
    for (int trial = 0; trial < 30; ++trial) {
      const auto cf = random_prefix_cf(rng, 101, true);
      const auto c = convergents(cf, 101);
      const auto even = convergents(even_part(cf, 50), 50);
      const auto odd = convergents(odd_part(cf, 50), 50);
      for (long k = 0; k <= 50; ++k) {
        o.require(even[k].A == c[2 * k].A && even[k].B == c[2 * k].B, "even k=" + std::to_string(k));
        if (k == 0) {
          o.require(odd[0].A == c[1].A / c[1].B && odd[0].B == 1, "odd k=0");
        } else {
          o.require(odd[k].A == c[2 * k + 1].A && odd[k].B == c[2 * k + 1].B, "odd k=" + std::to_string(k));
        }
      }
    }
    o.detail << "30 fractions, k <= 50; ";
  });

  criterion("1c", "Bauer-Muir pairs are C_n = A_n + w_n A_n-1, D_n = B_n + w_n B_n-1", [&](Outcome& o) {
    std::mt19937_64 rng(1003);
    int done = 0;
    while (done < 30) {
      const auto cf = random_prefix_cf(rng, 50, false);
      const auto w = random_values(rng, 51);
      BauerMuirResult bm;
      try {
        bm = bauer_muir(cf, w, 50);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TransformDoesNotExist) throw;
        continue;
      }
      const auto c = convergents(cf, 50);
      const auto d = convergents(bm.cf, 50);
      for (long n = 1; n <= 50; ++n) {
        o.require(d[n].A == c[n].A + w[n] * c[n - 1].A && d[n].B == c[n].B + w[n] * c[n - 1].B,
                  "n=" + std::to_string(n));
      }
      ++done;
    }
    o.detail << "30 fractions, n <= 50; ";
  });

  criterion("1d", "extension: even part is the e fraction, odd part is its Bauer-Muir transform", [&](Outcome& o) {
    const auto e = e_cf();
    std::vector<Rational> w{0};
    for (long n = 1; n <= 21; ++n) w.push_back(n + 1);
    const auto ext = extension_bmoe(e, w, 21);
    const auto even = values(even_part(ext, 20), 20);
    const auto orig = values(e, 20);
    const auto odd = values(odd_part(ext, 20), 20);
    const auto bm = values(bauer_muir(e, w, 21).cf, 21);
    for (long k = 0; k < 20; ++k) {
      o.require(even[k + 1] == orig[k + 1], "even k=" + std::to_string(k + 1));
      o.require(odd[k] == bm[k + 1], "odd k=" + std::to_string(k));
    }
    o.detail << "20 indices, w_0 = 0, w_n = n+1; ";
  });

  criterion("1e", "determinant identity A_N B_N-1 - A_N-1 B_N = (-1)^(N-1) prod a_i", [&](Outcome& o) {
    std::mt19937_64 rng(1005);
    std::vector<CFSpec> cfs{e_cf(), brouncker_cf()};
    for (int i = 0; i < 8; ++i) cfs.push_back(random_prefix_cf(rng, 200, i % 2 == 0));
    for (const auto& cf : cfs) {
      const auto c = convergents(cf, 200);
      const auto terms = realize_terms(cf, 200);
      Rational prod = 1;
      for (long N = 1; N <= 200; ++N) {
        prod *= terms[N - 1].a;
        const Rational lhs = c[N].A * c[N - 1].B - c[N - 1].A * c[N].B;
        o.require(lhs == (N % 2 == 1 ? prod : Rational(-prod)), "N=" + std::to_string(N));
      }
    }
    o.detail << "10 fractions, N <= 200; ";
  });

  criterion("2a", "Brouncker: |4/value - pi| < 1e-3 at 10^4 terms in < 10 s", [&](Outcome& o) {
    const auto t = Clock::now();
    const Real v = value_at(brouncker(), 10000, 128);
    within(o, Real::from_int(4, 128) / v, pi(128), "1e-3", "brouncker");
    o.require(seconds_since(t) < 10, "time");
  });

  criterion("2b", "ex1.1 fractions equal 6m+1 within 1e-8 at 100 terms", [&](Outcome& o) {
    for (const char* f : {"1", "n", "n^2"}) {
      for (long m = 1; m <= 3; ++m) {
        const auto member = make_preset("ex1.1", {{"f", f}, {"m", std::to_string(m)}});
        within(o, value_at(member, 100, 128), Real::from_int(6 * m + 1, 128), "1e-8",
               std::string("f=") + f + " m=" + std::to_string(m));
      }
    }
  });

  criterion("2c", "Pincherle presets converge to 2, 1/2, 1 within 1e-8 at 100 terms", [&](Outcome& o) {
    within(o, value_at(make_preset("ex2.2"), 100, 128), Real::from_int(2, 128), "1e-8", "ex2.2");
    within(o, value_at(make_preset("ex2.4"), 100, 128), Real::from_rational(q(1, 2), 128), "1e-8", "ex2.4");
    within(o, value_at(make_preset("ex2.5"), 100, 128), Real::from_int(1, 128), "1e-8", "ex2.5");
  });

  criterion("2d", "pi/4 family, A = 1..5, within 1e-3 at 10^4 terms", [&](Outcome& o) {
    for (long A = 1; A <= 5; ++A) {
      within(o, value_at(make_preset("ex3.3", {{"A", std::to_string(A)}}), 10000, 128), pi(128).scaled(-2), "1e-3",
             "A=" + std::to_string(A));
    }
  });

  criterion("2e", "zeta family, k = 2, 3, 11 and A = 1..3, within 1e-4 / 1e-6 / 1e-20", [&](Outcome& o) {
    struct Case {
      long k, terms, bits;
      const char* tol;
    };
    for (const Case& c : {Case{2, 200, 128, "1e-4"}, Case{3, 400, 128, "1e-6"}, Case{11, 200, 192, "1e-20"}}) {
      const Real z = reference_constant(NamedConstant::zeta(c.k), c.bits);
      for (long A = 1; A <= 3; ++A) {
        const auto m = make_preset("ex3.4", {{"k", std::to_string(c.k)}, {"A", std::to_string(A)}});
        within(o, value_at(m, c.terms, c.bits), z, c.tol, "k=" + std::to_string(c.k) + " A=" + std::to_string(A));
      }
    }
  });

  criterion("2f", "binomial family, A = 1..3, equals (12/7)^(1/5) within 1e-12 at 120 terms", [&](Outcome& o) {
    const Real root = reference_constant(NamedConstant::root(q(12, 7), q(1, 5)), 128);
    for (long A = 1; A <= 3; ++A) {
      within(o, value_at(make_preset("ex3.5", {{"A", std::to_string(A)}}), 120, 128), root, "1e-12",
             "A=" + std::to_string(A));
    }
  });

  criterion("2g", "sine product family, A = -1, 0, 1, equals 3 sqrt 3/(2 pi) within 1e-3 at 10^4 terms",
            [&](Outcome& o) {
              const Real target = sqrt(Real::from_int(27, 128)) / (Real::from_int(2, 128) * pi(128));
              for (long A = -1; A <= 1; ++A) {
                within(o, value_at(make_preset("ex4.2", {{"m", "3"}, {"A", std::to_string(A)}}), 10000, 128), target,
                       "1e-3", "A=" + std::to_string(A));
              }
            });

  criterion("2h", "e from Bauer-Muir, A = 0..3, within 1e-10 at 60 terms", [&](Outcome& o) {
    const Real e = reference_constant(NamedConstant::e(), 128);
    for (long A = 0; A <= 3; ++A) {
      within(o, value_at(make_preset("ex5.6", {{"A", std::to_string(A)}}), 60, 128), e, "1e-10",
             "A=" + std::to_string(A));
    }
  });

  criterion("2i", "Entry 13 with a = b = d = 1 within 1e-6 of 1 at 200 terms", [&](Outcome& o) {
    within(o, value_at(make_preset("entry13"), 200, 128), Real::from_int(1, 128), "1e-6", "entry13");
  });

  criterion("3", "ten admissible b with H = n+2 all give 2 within 1e-8", [&](Outcome& o) {
    int count = 0;
    for (const char* b : {"n+1", "n+2", "n+3", "2n+1", "3n", "n^2+1", "n^2+n+1", "2n^2", "n^3+2", "5n+4"}) {
      const auto m = pincherle_family(parse_ratfn("n+2"), parse_ratfn(b));
      o.require(m.verified(), std::string("admissible b=") + b);
      within(o, value_at(m, 100, 128), Real::from_int(2, 128), "1e-8", std::string("b=") + b);
      ++count;
    }
    o.detail << count << " choices of b; ";
  });

  criterion("4", "Tietze: e fraction certified with N0 = 1, Brouncker not certifiable, each < 1 s", [&](Outcome& o) {
    auto t = Clock::now();
    const auto e = tietze_check(e_cf(), 100);
    o.require(seconds_since(t) < 1, "e time");
    o.require(e.holds && e.N0 == 1, "e certificate");
    t = Clock::now();
    const auto b = tietze_check(brouncker_cf(), 100);
    o.require(seconds_since(t) < 1, "brouncker time");
    o.require(!b.holds, "brouncker not certifiable");
  });

  criterion("5", "growth constants are positive for the e fraction and the all-ones fraction", [&](Outcome& o) {
    const auto g = growth_diagnostics(e_cf(), 50);
    o.require(g.kind == GrowthBound::Kind::FactorialPower && g.k == 1 && g.C.sign() > 0, "e fraction");
    const CFSpec ones{Rational(1), {}, Tail{RationalFunction::constant(1), RationalFunction::constant(1), 1}};
    const auto f = growth_diagnostics(ones, 50);
    o.require(f.kind == GrowthBound::Kind::GoldenRatio && f.C.sign() > 0, "all ones");
    const auto c = convergents(ones, 50);
    Integer prev = 1, cur = 1;  // F_1, F_2
    for (long n = 1; n <= 50; ++n) {
      o.require(c[n].B == cur, "B_n Fibonacci n=" + std::to_string(n));
      std::swap(prev, cur);
      cur += prev;
    }
  });

  criterion("6", "reproduce-paper passes criteria 2a-2i and is byte-deterministic", [&](Outcome& o) {
    int s1 = 0, s2 = 0;
    const std::string first = run_cli("reproduce-paper --jobs 4", s1);
    const std::string second = run_cli("reproduce-paper --jobs 1", s2);
    o.require(!first.empty() && first == second, "identical output");
    o.require(s1 == 0 && s2 == 0, "all verdicts Pass");
    o.detail << "exit statuses " << s1 << "/" << s2 << "; ";
  });

  return failures == 0 ? 0 : 1;
}
