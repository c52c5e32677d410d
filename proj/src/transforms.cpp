#include "polycf/transforms.hpp"

#include <string>

#include "polycf/errors.hpp"

namespace polycf {

namespace {

const Rational& at(std::span<const Rational> v, long i) {
  return v[static_cast<std::size_t>(i)];
}

// 1-based access into a vector of realized terms.
struct Terms {
  std::vector<Term> terms;
  const Rational& a(long n) const { return terms[static_cast<std::size_t>(n - 1)].a; }
  const Rational& b(long n) const { return terms[static_cast<std::size_t>(n - 1)].b; }
};

void require_perturbation(const std::vector<Rational>& b, std::size_t expected) {
  if (b.size() != expected) {
    throw Error(ErrorKind::InvalidArgument,
                "perturbation needs " + std::to_string(expected) + " entries, got " +
                    std::to_string(b.size()));
  }
}

}  // namespace

CFSpec bernoulli_from_sequence(std::span<const Rational> K) {
  if (K.empty()) throw Error(ErrorKind::InvalidArgument, "empty sequence");
  const auto N = static_cast<long>(K.size()) - 1;
  for (long i = 1; i <= N; ++i) {
    if (at(K, i) == at(K, i - 1)) throw Error(ErrorKind::RepeatedValue, "K_i = K_{i-1}", i);
  }
  CFSpec out{at(K, 0), {}, std::nullopt};
  for (long n = 1; n <= N; ++n) {
    if (n == 1) {
      out.prefix.push_back({at(K, 1) - at(K, 0), Rational(1)});
    } else if (n == 2) {
      out.prefix.push_back({at(K, 1) - at(K, 2), at(K, 2) - at(K, 0)});
    } else {
      out.prefix.push_back({(at(K, n - 2) - at(K, n - 3)) * (at(K, n - 1) - at(K, n)),
                            at(K, n) - at(K, n - 2)});
    }
  }
  return out;
}

CFSpec euler_from_series(const SeriesSpec& s) {
  if (!s.perturbation.empty()) {
    throw Error(ErrorKind::InvalidArgument, "use generalized_euler for perturbed series");
  }
  if (s.terms.empty()) throw Error(ErrorKind::InvalidArgument, "empty series");
  std::span<const Rational> a(s.terms);
  const auto N = static_cast<long>(a.size()) - 1;
  for (long n = 1; n <= N; ++n) {
    if (sgn(at(a, n)) == 0) throw Error(ErrorKind::ZeroTerm, "a_n = 0", n);
  }
  CFSpec out{at(a, 0), {}, std::nullopt};
  for (long n = 1; n <= N; ++n) {
    if (n == 1) {
      out.prefix.push_back({at(a, 1), Rational(1)});
    } else if (n == 2) {
      out.prefix.push_back({-at(a, 2), at(a, 1) + at(a, 2)});
    } else {
      out.prefix.push_back({-at(a, n - 2) * at(a, n), at(a, n - 1) + at(a, n)});
    }
  }
  return out;
}

CFSpec generalized_euler(const SeriesSpec& s) {
  if (s.terms.empty()) throw Error(ErrorKind::InvalidArgument, "empty series");
  std::span<const Rational> a(s.terms);
  const auto N = static_cast<long>(a.size()) - 1;
  std::vector<Rational> zeros;
  if (s.perturbation.empty()) zeros.assign(a.size(), Rational(0));
  else require_perturbation(s.perturbation, a.size());
  std::span<const Rational> b = s.perturbation.empty() ? std::span<const Rational>(zeros)
                                                       : std::span<const Rational>(s.perturbation);

  // delta[n] = K_n - K_{n-1} where K_n = a_0 + ... + a_n + b_n.
  std::vector<Rational> delta(a.size());
  for (long n = 1; n <= N; ++n) {
    delta[static_cast<std::size_t>(n)] = at(a, n) + at(b, n) - at(b, n - 1);
    if (sgn(delta[static_cast<std::size_t>(n)]) == 0) {
      throw Error(ErrorKind::DegenerateTerm, "a_n + b_n - b_{n-1} = 0", n);
    }
  }
  std::span<const Rational> d(delta);
  CFSpec out{at(a, 0) + at(b, 0), {}, std::nullopt};
  for (long n = 1; n <= N; ++n) {
    if (n == 1) {
      out.prefix.push_back({at(d, 1), Rational(1)});
    } else if (n == 2) {
      out.prefix.push_back({-at(d, 2), at(a, 2) + at(a, 1) + at(b, 2) - at(b, 0)});
    } else {
      out.prefix.push_back({-at(d, n - 2) * at(d, n),
                            at(a, n) + at(a, n - 1) + at(b, n) - at(b, n - 2)});
    }
  }
  return out;
}

CFSpec product_to_cf(const ProductSpec& p) {
  if (!p.perturbation.empty()) {
    throw Error(ErrorKind::InvalidArgument, "use generalized_product for perturbed products");
  }
  const auto N = static_cast<long>(p.factors.size());
  auto a = [&](long i) -> const Rational& { return p.factors[static_cast<std::size_t>(i - 1)]; };
  for (long i = 1; i <= N; ++i) {
    if (sgn(a(i)) == 0) throw Error(ErrorKind::ZeroTerm, "a_i = 0", i);
    if (a(i) == 1) throw Error(ErrorKind::UnitTerm, "a_i = 1", i);
  }
  CFSpec out{Rational(1), {}, std::nullopt};
  for (long n = 1; n <= N; ++n) {
    if (n == 1) {
      out.prefix.push_back({a(1) - 1, Rational(1)});
    } else if (n == 2) {
      out.prefix.push_back({-a(1) * (a(2) - 1), a(2) * a(1) - 1});
    } else {
      out.prefix.push_back({-a(n - 1) * (a(n - 2) - 1) * (a(n) - 1), a(n) * a(n - 1) - 1});
    }
  }
  return out;
}

CFSpec generalized_product(const ProductSpec& p) {
  const auto N = static_cast<long>(p.factors.size());
  require_perturbation(p.perturbation, p.factors.size() + 1);
  auto a = [&](long i) -> const Rational& { return p.factors[static_cast<std::size_t>(i - 1)]; };
  auto b = [&](long i) -> const Rational& { return p.perturbation[static_cast<std::size_t>(i)]; };

  // eps[n] = a_n b_n - b_{n-1}.
  std::vector<Rational> eps(static_cast<std::size_t>(N) + 1);
  for (long i = 1; i <= N; ++i) {
    if (sgn(a(i)) == 0) throw Error(ErrorKind::ZeroTerm, "a_i = 0", i);
    eps[static_cast<std::size_t>(i)] = a(i) * b(i) - b(i - 1);
    if (sgn(eps[static_cast<std::size_t>(i)]) == 0) {
      throw Error(ErrorKind::DegenerateTerm, "a_i b_i - b_{i-1} = 0", i);
    }
  }
  auto e = [&](long i) -> const Rational& { return eps[static_cast<std::size_t>(i)]; };
  CFSpec out{b(0), {}, std::nullopt};
  for (long n = 1; n <= N; ++n) {
    if (n == 1) {
      out.prefix.push_back({e(1), Rational(1)});
    } else if (n == 2) {
      out.prefix.push_back({-a(1) * e(2), a(2) * a(1) * b(2) - b(0)});
    } else {
      out.prefix.push_back({-a(n - 1) * e(n - 2) * e(n), a(n) * a(n - 1) * b(n) - b(n - 2)});
    }
  }
  return out;
}

CFSpec even_part(const CFSpec& cf, long N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be non-negative");
  const Terms t{realize_terms(cf, 2 * N)};
  for (long k = 1; k <= N; ++k) {
    if (sgn(t.b(2 * k)) == 0) throw Error(ErrorKind::ZeroEvenDenominator, "b_2k = 0", 2 * k);
  }
  CFSpec out{cf.b0, {}, std::nullopt};
  for (long k = 1; k <= N; ++k) {
    if (k == 1) {
      out.prefix.push_back({t.b(2) * t.a(1), t.b(2) * t.b(1) + t.a(2)});
      continue;
    }
    const Rational ratio = t.b(2 * k) / t.b(2 * k - 2);
    out.prefix.push_back({-t.a(2 * k - 2) * t.a(2 * k - 1) * ratio,
                          t.a(2 * k) + t.b(2 * k - 1) * t.b(2 * k) + t.a(2 * k - 1) * ratio});
  }
  return out;
}

CFSpec odd_part(const CFSpec& cf, long N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be non-negative");
  const Terms t{realize_terms(cf, 2 * N + 1)};
  for (long k = 0; k <= N; ++k) {
    if (sgn(t.b(2 * k + 1)) == 0) {
      throw Error(ErrorKind::ZeroOddDenominator, "b_2k+1 = 0", 2 * k + 1);
    }
  }
  CFSpec out{(cf.b0 * t.b(1) + t.a(1)) / t.b(1), {}, std::nullopt};
  for (long k = 1; k <= N; ++k) {
    if (k == 1) {
      out.prefix.push_back({-t.a(1) * t.a(2) * t.b(3) / t.b(1),
                            t.b(1) * (t.a(3) + t.b(2) * t.b(3)) + t.a(2) * t.b(3)});
      continue;
    }
    const Rational ratio = t.b(2 * k + 1) / t.b(2 * k - 1);
    Rational c = -t.a(2 * k - 1) * t.a(2 * k) * ratio;
    // C_0 = A_1/B_1 rather than A_1, so the second numerator carries b_1.
    if (k == 2) c *= t.b(1);
    out.prefix.push_back({c, t.a(2 * k + 1) + t.b(2 * k) * t.b(2 * k + 1) + t.a(2 * k) * ratio});
  }
  return out;
}

namespace {

std::vector<Rational> existence_margins(const Terms& t, std::span<const Rational> w, long N) {
  std::vector<Rational> margin;
  margin.reserve(static_cast<std::size_t>(N));
  for (long n = 1; n <= N; ++n) {
    Rational m = t.a(n) - at(w, n - 1) * (t.b(n) + at(w, n));
    if (sgn(m) == 0) {
      throw Error(ErrorKind::TransformDoesNotExist, "a_n - w_{n-1}(b_n + w_n) = 0", n);
    }
    margin.push_back(std::move(m));
  }
  return margin;
}

void require_w(std::span<const Rational> w, long N) {
  if (static_cast<long>(w.size()) < N + 1) {
    throw Error(ErrorKind::InvalidArgument,
                "w needs entries w_0..w_" + std::to_string(N));
  }
}

}  // namespace

BauerMuirResult bauer_muir(const CFSpec& cf, std::span<const Rational> w, long N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be non-negative");
  require_w(w, N);
  const Terms t{realize_terms(cf, N)};
  auto margin = existence_margins(t, w, N);
  auto lam = [&](long n) -> const Rational& { return margin[static_cast<std::size_t>(n - 1)]; };

  BauerMuirResult out;
  out.cf.b0 = cf.b0 + at(w, 0);
  for (long n = 1; n <= N; ++n) {
    if (n == 1) {
      out.cf.prefix.push_back({lam(1), t.b(1) + at(w, 1)});
      continue;
    }
    const Rational ratio = lam(n) / lam(n - 1);
    out.cf.prefix.push_back({t.a(n - 1) * ratio, t.b(n) + at(w, n) - at(w, n - 2) * ratio});
  }
  out.w.assign(w.begin(), w.begin() + N + 1);
  out.existence_margin = std::move(margin);
  return out;
}

CFSpec extension_bmoe(const CFSpec& cf, std::span<const Rational> w, long N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be non-negative");
  require_w(w, N);
  if (sgn(at(w, 0)) != 0) throw Error(ErrorKind::NonzeroW0, "w_0 must be 0", 0);
  for (long n = 1; n <= N; ++n) {
    if (sgn(at(w, n)) == 0) throw Error(ErrorKind::ZeroW, "w_n = 0", n);
  }
  const Terms t{realize_terms(cf, N)};
  existence_margins(t, w, N);

  CFSpec out{cf.b0, {}, std::nullopt};
  for (long k = 1; k <= N; ++k) {
    if (k == 1) {
      out.prefix.push_back({t.a(1), t.b(1) + at(w, 1)});
    } else {
      const Rational q = t.a(k) / at(w, k - 1);
      out.prefix.push_back({q, t.b(k) + at(w, k) - q});
    }
    out.prefix.push_back({-at(w, k), Rational(1)});
  }
  return out;
}

}  // namespace polycf
