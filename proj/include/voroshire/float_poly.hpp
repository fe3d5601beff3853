#pragma once

#include <vector>

#include "voroshire/bigfloat.hpp"
#include "voroshire/exact_poly.hpp"

namespace voroshire {

/// Floating image of an exact polynomial at a fixed precision.
/// scaling_log records ln|s| of the exact scalar s divided out during
/// conversion, so potentials computed from the coefficients can be restored.
struct FloatPoly {
  std::vector<BigComplex> coeffs;  // index = power, leading entry nonzero
  double scaling_log = 0.0;
  unsigned precision_bits = 256;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigComplex evaluate(const BigComplex& z) const;

  /// p(z) and p'(z) in one Horner pass.
  struct ValueAndDerivative {
    BigComplex value, derivative;
  };
  ValueAndDerivative evaluate_with_derivative(const BigComplex& z) const;
};

/// Rounds the coefficients to precision_bits. With normalize set, the
/// polynomial is first divided (exactly) by its largest-magnitude
/// coefficient, and scaling_log records the division; iterate numerators
/// grow factorially, so raw coefficients can dwarf double range.
FloatPoly to_float_poly(const ExactPoly& p, unsigned precision_bits, bool normalize);

}  // namespace voroshire
