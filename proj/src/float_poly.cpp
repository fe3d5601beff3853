#include "voroshire/float_poly.hpp"

#include <stdexcept>

namespace voroshire {

BigComplex FloatPoly::evaluate(const BigComplex& z) const {
  BigComplex acc;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

FloatPoly::ValueAndDerivative FloatPoly::evaluate_with_derivative(const BigComplex& z) const {
  BigComplex p, dp;
  for (size_t k = coeffs.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
  return {std::move(p), std::move(dp)};
}

FloatPoly to_float_poly(const ExactPoly& p, unsigned precision_bits, bool normalize) {
  if (p.is_zero()) throw std::domain_error("to_float_poly: zero polynomial");
  BigFloat::PrecisionGuard guard(precision_bits);

  FloatPoly out;
  out.precision_bits = precision_bits;

  auto coeffs = p.coefficients();
  if (normalize) {
    size_t largest = 0;
    mpq_class largest_norm = coeffs[0].norm2();
    for (size_t k = 1; k < coeffs.size(); ++k) {
      mpq_class n2 = coeffs[k].norm2();
      if (n2 > largest_norm) {
        largest_norm = n2;
        largest = k;
      }
    }
    const GaussRational scale_inv = coeffs[largest].inverse();
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      GaussRational scaled = c * scale_inv;
      out.coeffs.emplace_back(scaled.re(), scaled.im());
    }
    out.scaling_log = 0.5 * log(BigFloat(largest_norm)).to_double();
  } else {
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) out.coeffs.emplace_back(c.re(), c.im());
  }
  return out;
}

}  // namespace voroshire
