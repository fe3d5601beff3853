#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "voroshire/float_poly.hpp"

namespace voroshire {

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, unsigned precision_bits)
      : std::runtime_error(what), precision_bits(precision_bits) {}
  unsigned precision_bits;
};

/// All roots of a polynomial, counted with multiplicity, sorted
/// lexicographically by (re, im). residuals holds the normalized backward
/// error |p(x)| / sum_k |a_k||x|^k per root.
struct RootSet {
  std::vector<BigComplex> roots;
  std::vector<double> residuals;
  unsigned precision_bits = 0;
  unsigned iterations = 0;
  double max_residual = 0.0;

  size_t degree() const { return roots.size(); }
  std::vector<std::complex<double>> to_complex() const;
};

struct AberthOptions {
  double residual_tol = 1e-30;
  unsigned max_iterations = 400;
};

/// Simultaneous Aberth-Ehrlich iteration, Jacobi-style sweeps (all updates
/// from the previous sweep's values), parallelized across roots. Initial
/// guesses are deterministic: a golden-angle spiral over the annulus given
/// by Fujiwara-type outer/inner root bounds. Throws NonConvergenceError.
RootSet find_roots(const FloatPoly& p, const AberthOptions& opts = {});

/// Serial reference: identical scheme with Gauss-Seidel (in-place) updates.
RootSet find_roots_serial(const FloatPoly& p, const AberthOptions& opts = {});

struct VietaReport {
  std::complex<double> sum, sum_expected, product, product_expected;
  double sum_rel_err = 0.0, product_rel_err = 0.0;
  bool ok(double rel_tol) const { return sum_rel_err <= rel_tol && product_rel_err <= rel_tol; }
};
VietaReport vieta_check(const RootSet& rs, const FloatPoly& p);

/// Converts and solves, doubling the precision (up to max_precision_bits)
/// whenever the solver fails to converge or a residual misses the tolerance.
RootSet solve_exact(const ExactPoly& p, unsigned precision_bits = 256,
                    const AberthOptions& opts = {}, unsigned max_precision_bits = 2048);

/// Zero-counting measure of a root set: weight (cluster size)/degree at each
/// clustered root. Roots closer than 2^(-precision/4) merge; merges are
/// reported so callers can log them (generic iterates have simple zeros).
struct WeightedAtom {
  std::complex<double> position;
  mpq_class weight;
  size_t multiplicity = 1;
};
struct AtomMeasure {
  std::vector<WeightedAtom> atoms;
  mpq_class total_mass;
  size_t merged_clusters = 0;
};
AtomMeasure empirical_measure(const RootSet& rs);

}  // namespace voroshire
