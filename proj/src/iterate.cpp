#include "voroshire/iterate.hpp"

#include <stdexcept>
#include <string>

namespace voroshire {

std::vector<ExactPoly> derivative_numerators(const RationalFn& h, unsigned K) {
  std::vector<ExactPoly> out;
  out.reserve(K + 1);
  out.push_back(h.numer());
  const ExactPoly& B = h.denom();
  const ExactPoly Bp = B.derivative();
  for (unsigned k = 0; k < K; ++k) {
    const ExactPoly& Ak = out.back();
    out.push_back(Ak.derivative() * B - Ak * Bp * GaussRational(static_cast<long>(k + 1)));
  }
  return out;
}

namespace {

void require_iterable(const RationalFn& h, const OperatorSymbol& q) {
  if (q.vanishing_order() >= 1 && !h.is_proper())
    throw std::domain_error(
        "iterate: the symbol vanishes at 0 and h has a polynomial part; "
        "split it off first (it is annihilated once n * r exceeds its degree)");
}

void verify_identities(const RationalFn& h, const OperatorSymbol& q, unsigned n,
                       const IterateResult& res) {
  const long a = h.numer_degree();
  const long b = h.denom_degree();
  const long m = q.order();
  const long r = q.vanishing_order();
  const long expected_degree = a + static_cast<long>(n) * (b * m - r);
  if (res.degree != expected_degree)
    throw std::logic_error("iterate: degree identity failed: got " +
                           std::to_string(res.degree) + ", expected " +
                           std::to_string(expected_degree));
  const GaussRational expected_lc = q.first_nonzero().pow(n) *
                                    h.numer().leading_coefficient() *
                                    falling_factorial(a - b, static_cast<unsigned>(r * n));
  if (res.leading != expected_lc)
    throw std::logic_error("iterate: leading-coefficient identity failed at n = " +
                           std::to_string(n));
  if (ExactPoly::gcd(res.numer, h.denom()).degree() != 0)
    throw std::logic_error("iterate: numerator shares a root with the denominator");
}

IterateResult finish(const RationalFn& h, const OperatorSymbol& q, unsigned n, ExactPoly numer) {
  IterateResult res;
  res.n = n;
  res.denom_power = q.order() * n + 1;
  res.degree = numer.degree();
  res.leading = numer.leading_coefficient();
  res.numer = std::move(numer);
  verify_identities(h, q, n, res);
  return res;
}

}  // namespace

IterateResult iterate_numerator_closed(const RationalFn& h, const OperatorSymbol& q, unsigned n) {
  require_iterable(h, q);
  const unsigned mn = q.order() * n;
  const unsigned rn = q.vanishing_order() * n;
  const std::vector<GaussRational> p = q.power_coefficients(n);
  const std::vector<ExactPoly> A = derivative_numerators(h, mn);
  // sum_{k=rn}^{mn} p_k A_k B^(mn-k), Horner in B from the highest power down
  ExactPoly acc = A[rn] * p[rn];
  for (unsigned k = rn + 1; k <= mn; ++k) {
    acc = acc * h.denom();
    if (!p[k].is_zero()) acc += A[k] * p[k];
  }
  return finish(h, q, n, std::move(acc));
}

NumeratorState apply_operator_once(const NumeratorState& state, const ExactPoly& B,
                                   const OperatorSymbol& q) {
  const unsigned m = q.order();
  const ExactPoly Bp = B.derivative();
  // N_j / B^(s+j) is the j-th derivative of N/B^s
  std::vector<ExactPoly> N(m + 1);
  N[0] = state.numer;
  for (unsigned j = 0; j < m; ++j)
    N[j + 1] = N[j].derivative() * B -
               N[j] * Bp * GaussRational(static_cast<long>(state.denom_power + j));
  // sum_j c_j N_j B^(m-j) over the common denominator B^(s+m)
  ExactPoly acc = N[0] * q.coeff(0);
  for (unsigned j = 1; j <= m; ++j) {
    acc = acc * B;
    if (!q.coeff(j).is_zero()) acc += N[j] * q.coeff(j);
  }
  return {std::move(acc), state.denom_power + m};
}

IterateResult iterate_numerator_stepwise(const RationalFn& h, const OperatorSymbol& q, unsigned n) {
  require_iterable(h, q);
  NumeratorState state{h.numer(), 1};
  for (unsigned step = 0; step < n; ++step) state = apply_operator_once(state, h.denom(), q);
  return finish(h, q, n, std::move(state.numer));
}

unsigned polynomial_part_death_index(const ExactPoly& Q, const OperatorSymbol& q) {
  const unsigned r = q.vanishing_order();
  if (r == 0)
    throw std::domain_error(
        "death index: the symbol has a nonzero constant term, so the polynomial part never dies");
  if (Q.is_zero()) return 0;
  const unsigned n = static_cast<unsigned>(Q.degree()) / r + 1;  // smallest n with rn > deg Q
  ExactPoly iter = Q;
  for (unsigned step = 0; step < n; ++step) iter = q.apply_to_polynomial(iter);
  if (!iter.is_zero())
    throw std::logic_error("death index: direct application did not annihilate the polynomial part");
  return n;
}

IterateResult iterate_full(const RationalFn& h, const OperatorSymbol& q, unsigned n) {
  if (q.vanishing_order() == 0 || h.is_proper()) return iterate_numerator_closed(h, q, n);

  auto [poly_part, proper] = h.split_polynomial_part();
  const unsigned death = polynomial_part_death_index(poly_part, q);
  IterateResult res = iterate_numerator_closed(proper, q, n);
  if (n < death) {
    ExactPoly iter = poly_part;
    for (unsigned step = 0; step < n; ++step) iter = q.apply_to_polynomial(iter);
    res.numer += iter * h.denom().pow(res.denom_power);
    res.degree = res.numer.degree();
    res.leading = res.numer.leading_coefficient();
  }
  res.death_index = death;
  return res;
}

std::vector<PoleValueCheck> pole_value_identity_check(const RationalFn& h, unsigned K) {
  if (!h.poles()) throw std::logic_error("pole_value_identity_check: h has no attached pole list");
  const auto& poles = *h.poles();
  const std::vector<ExactPoly> A = derivative_numerators(h, K);
  const ExactPoly Bp = h.denom().derivative();

  std::vector<PoleValueCheck> out;
  out.reserve(poles.size() * (K + 1));
  for (size_t i = 0; i < poles.size(); ++i) {
    const GaussRational Az = h.numer().evaluate(poles[i]);
    const GaussRational Bpz = Bp.evaluate(poles[i]);
    GaussRational expected = Az;  // (-1)^k k! A(z_i) B'(z_i)^k, built incrementally
    for (unsigned k = 0; k <= K; ++k) {
      const GaussRational actual = A[k].evaluate(poles[i]);
      out.push_back({k, i, actual == expected && !actual.is_zero()});
      expected = expected * Bpz * GaussRational(-(static_cast<long>(k) + 1));
    }
  }
  return out;
}

}  // namespace voroshire
