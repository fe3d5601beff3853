#pragma once

#include <complex>
#include <span>

#include "voroshire/float_poly.hpp"
#include "voroshire/operator_symbol.hpp"
#include "voroshire/voronoi.hpp"

namespace voroshire {

/// (1/(b-1)) (log|B(z)| - log psi(z)) evaluated from the site list: the
/// nearest site's log term is dropped, which is also the continuous
/// extension at the sites themselves. Finite everywhere. Requires b >= 2.
double bh_potential(const PoleSet& S, std::complex<double> z);

/// Limit potential m(b-1)/(bm-r) * Xi(z) - log|c_r| / (bm-r).
/// At r = 0 this is (b-1)/b * Xi(z) - log|c_0|/(mb), the same expression.
double limit_potential(const PoleSet& S, unsigned m, unsigned r, double abs_c_r,
                       std::complex<double> z);
double limit_potential(const PoleSet& S, const OperatorSymbol& q, std::complex<double> z);

/// Mean of log|z - root|; -infinity exactly at a root.
double empirical_potential(std::span<const std::complex<double>> roots, std::complex<double> z);

/// Coefficient form (log|p(z)| - log|LC|)/deg, evaluated in the
/// polynomial's own precision so large degrees cannot overflow.
/// Throws for constant polynomials.
double empirical_potential(const FloatPoly& p, std::complex<double> z);

/// (log((mn)!) - log((rn)!)) / d_n via log-gamma; identically 0 when r = m.
double shift_term(unsigned m, unsigned r, unsigned long n, long d_n);

}  // namespace voroshire
