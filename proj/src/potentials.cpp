#include "voroshire/potentials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace voroshire {

double bh_potential(const PoleSet& S, std::complex<double> z) {
  const size_t b = S.size();
  if (b < 2)
    throw std::domain_error("bh_potential: needs at least two poles (the 1/(b-1) factor)");
  size_t nearest = 0;
  double best = std::abs(z - S.site(0));
  for (size_t i = 1; i < b; ++i) {
    double d = std::abs(z - S.site(i));
    if (d < best) {
      best = d;
      nearest = i;
    }
  }
  double sum = 0;
  for (size_t i = 0; i < b; ++i)
    if (i != nearest) sum += std::log(std::abs(z - S.site(i)));
  return sum / static_cast<double>(b - 1);
}

double limit_potential(const PoleSet& S, unsigned m, unsigned r, double abs_c_r,
                       std::complex<double> z) {
  const double b = static_cast<double>(S.size());
  const double denom = b * m - r;
  return m * (b - 1) / denom * bh_potential(S, z) - std::log(abs_c_r) / denom;
}

double limit_potential(const PoleSet& S, const OperatorSymbol& q, std::complex<double> z) {
  const double abs_cr = std::sqrt(q.first_nonzero().norm2().get_d());
  return limit_potential(S, q.order(), q.vanishing_order(), abs_cr, z);
}

double empirical_potential(std::span<const std::complex<double>> roots, std::complex<double> z) {
  if (roots.empty()) throw std::domain_error("empirical_potential: no roots");
  double sum = 0;
  for (auto r : roots) {
    const double d = std::abs(z - r);
    if (d == 0.0) return -std::numeric_limits<double>::infinity();
    sum += std::log(d);
  }
  return sum / static_cast<double>(roots.size());
}

double empirical_potential(const FloatPoly& p, std::complex<double> z) {
  const int k = p.degree();
  if (k < 1) throw std::domain_error("empirical_potential: constant polynomial");
  BigFloat::PrecisionGuard guard(p.precision_bits);
  const BigFloat pz = p.evaluate(BigComplex(z)).abs();
  if (pz.is_zero()) return -std::numeric_limits<double>::infinity();
  const BigFloat lc = p.coeffs.back().abs();
  return ((log(pz) - log(lc)) / BigFloat(static_cast<long>(k))).to_double();
}

double shift_term(unsigned m, unsigned r, unsigned long n, long d_n) {
  if (r == m) return 0.0;
  if (n < 1 || d_n < 1) throw std::domain_error("shift_term: n and d_n must be positive");
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  const double rn = static_cast<double>(r) * static_cast<double>(n);
  return (std::lgamma(mn + 1.0) - std::lgamma(rn + 1.0)) / static_cast<double>(d_n);
}

}  // namespace voroshire
