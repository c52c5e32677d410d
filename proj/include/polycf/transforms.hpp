#pragma once

#include <span>
#include <vector>

#include "polycf/cf.hpp"

namespace polycf {

/// Series a_0 + a_1 + ... realized through index N, with an optional
/// perturbation b_0..b_N (same length as terms when present).
struct SeriesSpec {
  std::vector<Rational> terms;
  std::vector<Rational> perturbation;
};

/// Product a_1 a_2 ... a_N with an optional perturbation b_0..b_N.
/// factors[i] holds a_{i+1}.
struct ProductSpec {
  std::vector<Rational> factors;
  std::vector<Rational> perturbation;
};

/// Continued fraction whose approximant n is K[n], for a sequence with no
/// two consecutive values equal (RepeatedValue otherwise).
CFSpec bernoulli_from_sequence(std::span<const Rational> K);

/// Euler's series-to-fraction transform; approximant n is a_0 + ... + a_n.
CFSpec euler_from_series(const SeriesSpec& s);

/// Perturbed Euler transform; approximant n is a_0 + ... + a_n + b_n.
/// DegenerateTerm at the first n with a_n + b_n - b_{n-1} = 0.
CFSpec generalized_euler(const SeriesSpec& s);

/// Product-to-fraction transform; approximant n is a_1 ... a_n.
CFSpec product_to_cf(const ProductSpec& p);

/// Perturbed product transform; approximant n is b_n a_1 ... a_n.
CFSpec generalized_product(const ProductSpec& p);

/// Canonical contraction onto the even convergents: the k-th canonical
/// pair of the result is (A_{2k}, B_{2k}) for k = 0..N.
CFSpec even_part(const CFSpec& cf, long N);

/// Canonical contraction onto the odd convergents, k = 0..N. The leading
/// term is A_1/B_1, so (C_0, D_0) = (A_1/B_1, 1) and (C_k, D_k) =
/// (A_{2k+1}, B_{2k+1}) for k >= 1.
CFSpec odd_part(const CFSpec& cf, long N);

struct BauerMuirResult {
  CFSpec cf;
  std::vector<Rational> w;
  /// a_n - w_{n-1}(b_n + w_n) for n = 1..N; all nonzero.
  std::vector<Rational> existence_margin;
};

/// Bauer-Muir transform with respect to w_0..w_N. The canonical pairs of
/// the result are C_n = A_n + w_n A_{n-1}, D_n = B_n + w_n B_{n-1}.
/// Throws TransformDoesNotExist at the first n with a vanishing margin.
BauerMuirResult bauer_muir(const CFSpec& cf, std::span<const Rational> w, long N);

/// The 2N-term fraction interleaving (a_n / w_{n-1}, b_n + w_n - a_n / w_{n-1})
/// with (-w_n, 1). Its even part reproduces cf; its odd part has the same
/// approximant values as bauer_muir(cf, w) shifted by one index.
CFSpec extension_bmoe(const CFSpec& cf, std::span<const Rational> w, long N);

}  // namespace polycf
