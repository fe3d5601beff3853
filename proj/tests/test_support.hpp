#pragma once

#include <random>
#include <vector>

#include "voroshire/operator_symbol.hpp"
#include "voroshire/rational_fn.hpp"

namespace voroshire::testing {

inline GaussRational random_rational(std::mt19937& rng, long max_abs = 4, long max_den = 3) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_den);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

inline ExactPoly random_poly(std::mt19937& rng, int degree, long max_abs = 4, long max_den = 3) {
  if (degree < 0) return {};
  std::vector<GaussRational> c(static_cast<size_t>(degree) + 1);
  for (auto& v : c) v = random_rational(rng, max_abs, max_den);
  while (c.back().is_zero()) c.back() = random_rational(rng, max_abs, max_den);
  return ExactPoly(std::move(c));
}

/// Monic denominator of the requested degree with simple roots.
inline ExactPoly random_simple_denominator(std::mt19937& rng, int degree) {
  while (true) {
    ExactPoly B = random_poly(rng, degree - 1, 3, 2) + ExactPoly::monomial(GaussRational(1),
                                                                           static_cast<unsigned>(degree));
    if (ExactPoly::gcd(B, B.derivative()).degree() == 0) return B;
  }
}

/// Reduced h = A/B with deg A = a (exactly), deg B = b, simple poles.
inline RationalFn random_instance(std::mt19937& rng, int a, int b) {
  while (true) {
    ExactPoly B = random_simple_denominator(rng, b);
    ExactPoly A = random_poly(rng, a);
    if (ExactPoly::gcd(A, B).degree() != 0) continue;
    RationalFn h(A, B);
    if (h.numer_degree() == a && h.denom_degree() == b) return h;
  }
}

/// Monic symbol of order m with vanishing order exactly r.
inline OperatorSymbol random_symbol(std::mt19937& rng, unsigned m, unsigned r) {
  while (true) {
    std::vector<GaussRational> c(m + 1);
    for (unsigned j = r; j < m; ++j) c[j] = random_rational(rng, 3, 2);
    c[m] = GaussRational(1);
    if (r < m && c[r].is_zero()) continue;
    return OperatorSymbol(std::move(c));
  }
}

}  // namespace voroshire::testing
