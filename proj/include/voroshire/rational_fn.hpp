#pragma once

#include <optional>
#include <vector>

#include "voroshire/exact_poly.hpp"

namespace voroshire {

struct PolyPartSplit;

/// Reduced rational function h = A/B with B monic and all poles simple
/// (gcd(B, B') = 1, checked exactly at construction). Non-monic B is
/// normalized by scaling A and B together. An optional exact pole list may
/// be attached; it is validated against B.
class RationalFn {
 public:
  RationalFn(ExactPoly numer, ExactPoly denom);

  /// B = prod (z - z_i) from exact, pairwise-distinct poles.
  static RationalFn from_poles(ExactPoly numer, std::vector<GaussRational> poles);

  const ExactPoly& numer() const { return numer_; }
  const ExactPoly& denom() const { return denom_; }
  int numer_degree() const { return numer_.degree(); }
  int denom_degree() const { return denom_.degree(); }
  bool is_proper() const { return numer_.degree() < denom_.degree(); }

  const std::optional<std::vector<GaussRational>>& poles() const { return poles_; }
  void attach_poles(std::vector<GaussRational> poles);

  /// Res(h, z_i) = A(z_i)/B'(z_i); requires an attached pole list.
  GaussRational residue_at(size_t pole_index) const;

  /// h = poly_part + proper_part with deg(proper numerator) < deg B.
  PolyPartSplit split_polynomial_part() const;

 private:
  RationalFn() = default;
  ExactPoly numer_, denom_;
  std::optional<std::vector<GaussRational>> poles_;
};

struct PolyPartSplit {
  ExactPoly poly_part;
  RationalFn proper_part;
};

}  // namespace voroshire
