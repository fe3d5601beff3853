#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "voroshire/aberth.hpp"
#include "voroshire/grid.hpp"
#include "voroshire/iterate.hpp"
#include "voroshire/potentials.hpp"
#include "voroshire/voronoi.hpp"

namespace voroshire {

/// PoleSet over the exact poles attached to h (throws without a pole list).
PoleSet make_pole_set(const RationalFn& h);

double default_escape_radius(const PoleSet& S);            // 10 * (1 + max |z_i|)
std::vector<double> default_tube_radii(const PoleSet& S);  // {0.4,0.2,0.1,0.05} * diam

/// Roots split into escaped (|z| > R) and retained; skeleton-distance
/// quantiles and epsilon-tube counts describe the retained part.
struct SkeletonStats {
  size_t degree = 0, escaped = 0, retained = 0;
  double median_distance = 0, q25 = 0, q75 = 0, q90 = 0, max_distance = 0;
  std::vector<std::pair<double, size_t>> tube_counts;  // (radius, retained roots within)
};
SkeletonStats skeleton_stats(const RootSet& rs, const VoronoiDiagram& V, double escape_radius,
                             std::span<const double> tube_radii);

struct EscapeRow {
  unsigned n = 0;
  size_t degree = 0, escaped = 0;
  double fraction = 0;        // escaped / degree
  double limit_fraction = 0;  // (m - r) / (bm - r)
};
std::vector<EscapeRow> escape_experiment(const RationalFn& h, const OperatorSymbol& q,
                                         std::span<const unsigned> n_list, double escape_radius,
                                         unsigned precision_bits = 256);

/// Shifted empirical potential fields against the limit potential, plus the
/// unshifted potential at a probe point (diverges when r < m).
struct PotentialRow {
  unsigned n = 0;
  size_t degree = 0;
  double l1_shifted = 0;
  double unshifted_at_probe = 0;
  double shift = 0;
};
struct PotentialConvergenceReport {
  std::vector<PotentialRow> rows;
  GridField limit_field;
  std::complex<double> probe;
};
PotentialConvergenceReport potential_convergence(const RationalFn& h, const OperatorSymbol& q,
                                                 std::span<const unsigned> n_list,
                                                 const BoundingBox& bbox, size_t nx, size_t ny,
                                                 std::complex<double> probe,
                                                 unsigned precision_bits = 256);

/// Normalized pointwise iterate (-1)^{mn} zeta^{mn+1} P(D)^n(h)(z) / (mn)!
/// against its limit alpha * exp(-c_{m-1} zeta / m); z must have a unique
/// nearest pole. Evaluation runs at the requested precision from the exact
/// numerator; the factorial never leaves the float layer.
struct GrowthRow {
  unsigned n = 0;
  std::complex<double> value, limit;
  double rel_deviation = 0;
};
std::vector<GrowthRow> growth_ratio_check(const RationalFn& h, const OperatorSymbol& q,
                                          std::complex<double> z, std::span<const unsigned> n_list,
                                          unsigned precision_bits = 512);

/// Exact-rational verification of the factorial-weighted coefficient bound
/// |p_{n,mn-l}| (mn-l)!/(mn)! <= [t^l] exp(sum_j (|c_{m-j}|/m) t^j) for all
/// l <= mn, with |c| replaced by the rational majorant |Re c| + |Im c| on
/// both sides (valid: the series coefficients increase with the bounds).
struct DefectBoundReport {
  unsigned n = 0;
  size_t checked = 0;
  bool all_ok = true;
  std::vector<unsigned> failed_defects;
};
DefectBoundReport defect_bound_check(const OperatorSymbol& q, unsigned n);

/// p_{n,mn-l} / (binom(n,l) c_{m-1}^l), exact; approaches 1. When c_{m-1}
/// vanishes the leading term is absent and the raw coefficient is reported.
struct DefectAsymptoticRow {
  unsigned n = 0;
  std::optional<GaussRational> ratio;  // absent when c_{m-1} = 0
  GaussRational raw;                   // p_{n,mn-l}
  double abs_deviation = 0;            // |ratio - 1|
};
std::vector<DefectAsymptoticRow> defect_asymptotic_check(const OperatorSymbol& q, unsigned defect,
                                                         std::span<const unsigned> n_list);

/// Single-pole degeneration: minimum root modulus must grow without bound
/// and the shifted potential approaches -log|c_r| / (m-r) at every fixed
/// point. Requires deg B = 1 and r < m (at r = m the numerator is constant).
struct OnePoleRow {
  unsigned n = 0;
  size_t degree = 0;
  double min_root_modulus = 0;
  double shifted_at_probe = 0;
};
struct OnePoleReport {
  std::vector<OnePoleRow> rows;
  double limit_value = 0;
};
OnePoleReport onepole_experiment(const RationalFn& h, const OperatorSymbol& q,
                                 std::span<const unsigned> n_list, std::complex<double> probe,
                                 unsigned precision_bits = 256);

}  // namespace voroshire
