#include "voroshire/operator_symbol.hpp"

#include <stdexcept>

namespace voroshire {

OperatorSymbol::OperatorSymbol(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("OperatorSymbol: empty coefficient list");
  if (!c_.back().is_one())
    throw std::invalid_argument("OperatorSymbol: symbol must be monic (top coefficient 1)");
  m_ = static_cast<unsigned>(c_.size() - 1);
  r_ = 0;
  while (c_[r_].is_zero()) ++r_;  // c_m = 1, so this terminates
}

std::vector<GaussRational> OperatorSymbol::power_coefficients(unsigned n) const {
  std::vector<GaussRational> p{GaussRational(1)};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<GaussRational> next(p.size() + m_);
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      for (unsigned j = r_; j <= m_; ++j) next[i + j] += p[i] * c_[j];
    }
    p = std::move(next);
  }
  return p;
}

ExactPoly OperatorSymbol::apply_to_polynomial(const ExactPoly& Q) const {
  ExactPoly out;
  ExactPoly der = Q;
  for (unsigned j = 0; j <= m_; ++j) {
    if (!c_[j].is_zero()) out += der * c_[j];
    if (j < m_) der = der.derivative();
  }
  return out;
}

}  // namespace voroshire
