#pragma once

#include <vector>

#include "voroshire/exact_poly.hpp"
#include "voroshire/gauss_rational.hpp"

namespace voroshire {

/// Monic symbol q(x) = x^m + c_{m-1}x^{m-1} + ... + c_0 of a
/// constant-coefficient operator. Stores c_0..c_m and the derived order of
/// vanishing r at 0 (smallest j with c_j != 0) with its coefficient c_r.
/// Non-monic input is rejected rather than rescaled: scaling the operator
/// rescales every iterate, so the caller must decide.
class OperatorSymbol {
 public:
  explicit OperatorSymbol(std::vector<GaussRational> coeffs);

  unsigned order() const { return m_; }             // m
  unsigned vanishing_order() const { return r_; }   // r = ord_0 q
  const GaussRational& first_nonzero() const { return c_[r_]; }  // c_r
  const GaussRational& coeff(unsigned j) const { return c_[j]; }
  const std::vector<GaussRational>& coeffs() const { return c_; }
  bool is_pure_derivative() const { return r_ == m_; }  // q(x) = x^m

  /// Coefficients p_{n,0..mn} of q(x)^n by repeated exact convolution.
  /// p_{n,mn} = 1, p_{n,k} = 0 for k < rn, p_{n,rn} = c_r^n.
  std::vector<GaussRational> power_coefficients(unsigned n) const;

  /// P(D) applied to a polynomial: sum_j c_j Q^(j).
  ExactPoly apply_to_polynomial(const ExactPoly& Q) const;

 private:
  std::vector<GaussRational> c_;
  unsigned m_ = 0, r_ = 0;
};

}  // namespace voroshire
