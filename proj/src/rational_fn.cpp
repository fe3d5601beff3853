#include "voroshire/rational_fn.hpp"

#include <stdexcept>

namespace voroshire {

RationalFn::RationalFn(ExactPoly numer, ExactPoly denom) {
  if (denom.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
  if (denom.degree() < 1)
    throw std::invalid_argument("RationalFn: denominator must have at least one root");
  if (numer.is_zero()) throw std::invalid_argument("RationalFn: zero numerator");

  ExactPoly g = ExactPoly::gcd(numer, denom);
  if (g.degree() > 0) {
    numer = ExactPoly::divrem(numer, g).quotient;
    denom = ExactPoly::divrem(denom, g).quotient;
  }
  // scale A and B together so that B is monic
  GaussRational lead_inv = denom.leading_coefficient().inverse();
  numer_ = numer * lead_inv;
  denom_ = denom * lead_inv;

  if (ExactPoly::gcd(denom_, denom_.derivative()).degree() != 0)
    throw std::invalid_argument("RationalFn: denominator has a multiple root (only simple poles supported)");
}

RationalFn RationalFn::from_poles(ExactPoly numer, std::vector<GaussRational> poles) {
  if (poles.empty()) throw std::invalid_argument("RationalFn: empty pole list");
  for (size_t i = 0; i < poles.size(); ++i)
    for (size_t j = i + 1; j < poles.size(); ++j)
      if (poles[i] == poles[j])
        throw std::invalid_argument("RationalFn: poles must be pairwise distinct");
  RationalFn h(std::move(numer), ExactPoly::from_roots(poles));
  h.attach_poles(std::move(poles));
  return h;
}

void RationalFn::attach_poles(std::vector<GaussRational> poles) {
  if (static_cast<int>(poles.size()) != denom_.degree())
    throw std::invalid_argument("RationalFn: pole count must equal the denominator degree");
  for (const auto& z : poles)
    if (!denom_.evaluate(z).is_zero())
      throw std::invalid_argument("RationalFn: listed pole is not a root of the denominator");
  poles_ = std::move(poles);
}

GaussRational RationalFn::residue_at(size_t pole_index) const {
  if (!poles_) throw std::logic_error("RationalFn: no pole list attached");
  if (pole_index >= poles_->size()) throw std::out_of_range("RationalFn: pole index");
  const GaussRational& z = (*poles_)[pole_index];
  return numer_.evaluate(z) / denom_.derivative().evaluate(z);
}

PolyPartSplit RationalFn::split_polynomial_part() const {
  auto [quotient, remainder] = ExactPoly::divrem(numer_, denom_);
  if (quotient.is_zero()) return {ExactPoly{}, *this};
  RationalFn proper;
  proper.numer_ = std::move(remainder);
  proper.denom_ = denom_;
  proper.poles_ = poles_;
  // A = QB + R and gcd(A,B) = 1 force gcd(R,B) = 1, so proper is reduced
  return {std::move(quotient), std::move(proper)};
}

}  // namespace voroshire
