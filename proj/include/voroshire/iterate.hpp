#pragma once

#include <optional>
#include <vector>

#include "voroshire/operator_symbol.hpp"
#include "voroshire/rational_fn.hpp"

namespace voroshire {

/// Numerators A_k of the derivatives h^(k) = A_k / B^(k+1):
/// A_0 = A, A_{k+1} = A_k' B - (k+1) A_k B'. Returns A_0..A_K.
std::vector<ExactPoly> derivative_numerators(const RationalFn& h, unsigned K);

/// Numerator of the n-th operator iterate over B^(mn+1), together with the
/// verified degree and leading coefficient. death_index is set when the
/// input had a polynomial part that had to be split off (vanishing order
/// r >= 1 with improper h).
struct IterateResult {
  unsigned n = 0;
  ExactPoly numer;
  unsigned denom_power = 1;  // mn + 1
  int degree = ExactPoly::kZeroDegree;
  GaussRational leading;
  std::optional<unsigned> death_index;
};

/// Closed-form route: numer = sum_k p_{n,k} A_k B^(mn-k).
/// Degree a + n(bm - r), leading coefficient c_r^n LC(A) (a-b)_{rn}, and
/// coprimality with B are verified exactly and a failure throws.
/// Requires r = 0, or r >= 1 with h proper; improper callers must split
/// the polynomial part first (see iterate_full).
IterateResult iterate_numerator_closed(const RationalFn& h, const OperatorSymbol& q, unsigned n);

/// Independent stepwise route: n successive applications of the operator to
/// N/B^s via D(N/B^s) = (N'B - sNB')/B^(s+1). Same preconditions, and the
/// resulting polynomial is identical to the closed form.
IterateResult iterate_numerator_stepwise(const RationalFn& h, const OperatorSymbol& q, unsigned n);

/// One operator application to a numerator state N/B^s.
struct NumeratorState {
  ExactPoly numer;
  unsigned denom_power = 1;
};
NumeratorState apply_operator_once(const NumeratorState& state, const ExactPoly& B,
                                   const OperatorSymbol& q);

/// Smallest n with rn > deg Q (0 for Q = 0); the vanishing of the n-fold
/// application is additionally verified by direct exact differentiation.
/// Throws for r = 0 (a polynomial part never dies).
unsigned polynomial_part_death_index(const ExactPoly& Q, const OperatorSymbol& q);

/// Driver that accepts any reduced h: when r >= 1 and h is improper the
/// polynomial part is split off and its death index recorded. For n below
/// the death index the true numerator P(D)^n(Q) B^(mn+1) + numer(proper)
/// is returned (identity checks apply only to the proper part).
IterateResult iterate_full(const RationalFn& h, const OperatorSymbol& q, unsigned n);

/// Exact check of A_k(z_i) = (-1)^k k! A(z_i) B'(z_i)^k for k <= K at every
/// attached pole.
struct PoleValueCheck {
  unsigned k;
  size_t pole_index;
  bool ok;
};
std::vector<PoleValueCheck> pole_value_identity_check(const RationalFn& h, unsigned K);

}  // namespace voroshire
