#include "voroshire/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace voroshire {

PoleSet make_pole_set(const RationalFn& h) {
  if (!h.poles()) throw std::logic_error("make_pole_set: h has no attached pole list");
  std::vector<std::complex<double>> sites;
  sites.reserve(h.poles()->size());
  for (const auto& z : *h.poles()) sites.push_back(z.to_complex());
  return PoleSet(std::move(sites));
}

double default_escape_radius(const PoleSet& S) { return 10.0 * (1.0 + S.max_modulus()); }

std::vector<double> default_tube_radii(const PoleSet& S) {
  const double d = S.diameter();
  return {0.4 * d, 0.2 * d, 0.1 * d, 0.05 * d};
}

namespace {

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double idx = p * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(idx);
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = idx - static_cast<double>(lo);
  return sorted[lo] * (1 - frac) + sorted[hi] * frac;
}

}  // namespace

SkeletonStats skeleton_stats(const RootSet& rs, const VoronoiDiagram& V, double escape_radius,
                             std::span<const double> tube_radii) {
  if (escape_radius <= V.sites().max_modulus())
    throw std::domain_error("skeleton_stats: escape radius must exceed the largest site modulus");
  SkeletonStats st;
  st.degree = rs.degree();

  std::vector<double> dists;
  for (const auto& root : rs.to_complex()) {
    if (std::abs(root) > escape_radius) {
      ++st.escaped;
      continue;
    }
    dists.push_back(dist_to_skeleton(V, root));
  }
  st.retained = dists.size();
  if (st.escaped + st.retained != st.degree)
    throw std::logic_error("skeleton_stats: escaped + retained must equal the degree");

  std::sort(dists.begin(), dists.end());
  st.median_distance = quantile(dists, 0.5);
  st.q25 = quantile(dists, 0.25);
  st.q75 = quantile(dists, 0.75);
  st.q90 = quantile(dists, 0.90);
  st.max_distance = dists.empty() ? 0.0 : dists.back();
  for (double eps : tube_radii) {
    const size_t within = static_cast<size_t>(
        std::upper_bound(dists.begin(), dists.end(), eps) - dists.begin());
    st.tube_counts.emplace_back(eps, within);
  }
  return st;
}

std::vector<EscapeRow> escape_experiment(const RationalFn& h, const OperatorSymbol& q,
                                         std::span<const unsigned> n_list, double escape_radius,
                                         unsigned precision_bits) {
  const double m = q.order(), r = q.vanishing_order();
  const double b = h.denom_degree();
  std::vector<EscapeRow> rows;
  for (unsigned n : n_list) {
    IterateResult it = iterate_full(h, q, n);
    RootSet rs = solve_exact(it.numer, precision_bits);
    EscapeRow row;
    row.n = n;
    row.degree = rs.degree();
    for (const auto& root : rs.to_complex())
      if (std::abs(root) > escape_radius) ++row.escaped;
    row.fraction = row.degree ? static_cast<double>(row.escaped) / static_cast<double>(row.degree)
                              : 0.0;
    row.limit_fraction = (m - r) / (b * m - r);
    rows.push_back(row);
  }
  return rows;
}

PotentialConvergenceReport potential_convergence(const RationalFn& h, const OperatorSymbol& q,
                                                 std::span<const unsigned> n_list,
                                                 const BoundingBox& bbox, size_t nx, size_t ny,
                                                 std::complex<double> probe,
                                                 unsigned precision_bits) {
  const PoleSet S = make_pole_set(h);
  PotentialConvergenceReport rep;
  rep.probe = probe;
  rep.limit_field =
      sample_field([&](std::complex<double> z) { return limit_potential(S, q, z); }, bbox, nx, ny);

  for (unsigned n : n_list) {
    IterateResult it = iterate_full(h, q, n);
    RootSet rs = solve_exact(it.numer, precision_bits);
    const std::vector<std::complex<double>> roots = rs.to_complex();

    const double shift =
        n == 0 ? 0.0 : shift_term(q.order(), q.vanishing_order(), n, it.degree);
    GridField field = sample_field(
        [&](std::complex<double> z) { return empirical_potential(roots, z) - shift; }, bbox, nx,
        ny);
    field.mask_near(roots, 1.0);

    PotentialRow row;
    row.n = n;
    row.degree = rs.degree();
    row.shift = shift;
    row.l1_shifted = l1_box_distance(field, rep.limit_field);
    row.unshifted_at_probe = empirical_potential(roots, probe);
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<GrowthRow> growth_ratio_check(const RationalFn& h, const OperatorSymbol& q,
                                          std::complex<double> z,
                                          std::span<const unsigned> n_list,
                                          unsigned precision_bits) {
  const PoleSet S = make_pole_set(h);
  const auto tied = nearest_sites(S, z, 1e-9);
  if (tied.size() != 1)
    throw std::domain_error(
        "growth_ratio_check: the evaluation point must have a unique nearest pole");
  const size_t i0 = tied.front();

  BigFloat::PrecisionGuard guard(precision_bits);
  const GaussRational alpha_exact = h.residue_at(i0);
  const BigComplex alpha(alpha_exact.re(), alpha_exact.im());
  const GaussRational& pole = (*h.poles())[i0];
  const BigComplex zeta = BigComplex(z) - BigComplex(pole.re(), pole.im());

  // exponential factor exp(-c_{m-1} zeta / m)
  const unsigned m = q.order();
  const GaussRational rate_exact = q.coeff(m - 1) / GaussRational(static_cast<long>(m));
  const BigComplex limit = alpha * exp(-(BigComplex(rate_exact.re(), rate_exact.im()) * zeta));

  // B(z) in the working precision, from exact coefficients
  BigComplex Bz;
  for (size_t k = h.denom().coefficient_count(); k-- > 0;) {
    const GaussRational& c = h.denom()[k];
    Bz = Bz * BigComplex(z) + BigComplex(c.re(), c.im());
  }

  std::vector<GrowthRow> rows;
  for (unsigned n : n_list) {
    IterateResult it = iterate_full(h, q, n);
    const unsigned long mn = static_cast<unsigned long>(m) * n;

    BigComplex Az;
    for (size_t k = it.numer.coefficient_count(); k-- > 0;) {
      const GaussRational& c = it.numer[k];
      Az = Az * BigComplex(z) + BigComplex(c.re(), c.im());
    }
    BigComplex val = zeta.pow(mn + 1) * Az / Bz.pow(mn + 1);
    val = val * BigComplex(BigFloat(1.0) / BigFloat::factorial(mn), BigFloat(0.0));
    if (mn % 2 == 1) val = -val;

    GrowthRow row;
    row.n = n;
    row.value = val.to_complex();
    row.limit = limit.to_complex();
    row.rel_deviation = ((val - limit).abs() / limit.abs()).to_double();
    rows.push_back(row);
  }
  return rows;
}

namespace {

mpq_class l1_majorant(const GaussRational& c) { return abs(c.re()) + abs(c.im()); }

// Coefficients of exp(sum_j gamma_j/m t^j) up to the given order, exact:
// l e_l = sum_i i (gamma_i / m) e_{l-i}.
std::vector<mpq_class> exp_series(const std::vector<mpq_class>& gamma, unsigned m,
                                  unsigned order) {
  std::vector<mpq_class> e(order + 1);
  e[0] = 1;
  for (unsigned l = 1; l <= order; ++l) {
    mpq_class acc(0);
    for (unsigned i = 1; i <= std::min(l, m); ++i)
      acc += mpq_class(i) * gamma[i] * e[l - i];
    e[l] = acc / (mpq_class(m) * mpq_class(l));
  }
  return e;
}

}  // namespace

DefectBoundReport defect_bound_check(const OperatorSymbol& q, unsigned n) {
  if (n < 1) throw std::domain_error("defect_bound_check: n must be positive");
  const unsigned m = q.order();
  const unsigned mn = m * n;
  const std::vector<GaussRational> p = q.power_coefficients(n);

  std::vector<mpq_class> gamma(m + 1);
  for (unsigned j = 1; j <= m; ++j) gamma[j] = l1_majorant(q.coeff(m - j));
  const std::vector<mpq_class> bound = exp_series(gamma, m, mn);

  DefectBoundReport rep;
  rep.n = n;
  mpq_class ratio(1);  // (mn-l)! / (mn)!
  for (unsigned l = 0; l <= mn; ++l) {
    if (l > 0) ratio /= mpq_class(mn - l + 1);
    const mpq_class lhs = l1_majorant(p[mn - l]) * ratio;
    ++rep.checked;
    if (lhs > bound[l]) {
      rep.all_ok = false;
      rep.failed_defects.push_back(l);
    }
  }
  return rep;
}

std::vector<DefectAsymptoticRow> defect_asymptotic_check(const OperatorSymbol& q, unsigned defect,
                                                         std::span<const unsigned> n_list) {
  if (defect < 1) throw std::domain_error("defect_asymptotic_check: defect must be >= 1");
  const unsigned m = q.order();
  const GaussRational& lead_coeff = q.coeff(m - 1);

  std::vector<DefectAsymptoticRow> rows;
  for (unsigned n : n_list) {
    const unsigned mn = m * n;
    if (defect > mn)
      throw std::domain_error("defect_asymptotic_check: defect exceeds the power degree");
    DefectAsymptoticRow row;
    row.n = n;
    row.raw = q.power_coefficients(n)[mn - defect];
    if (!lead_coeff.is_zero()) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), n, defect);
      row.ratio = row.raw / (GaussRational(mpq_class(binom)) * lead_coeff.pow(defect));
      const GaussRational dev = *row.ratio - GaussRational(1);
      row.abs_deviation = std::sqrt(dev.norm2().get_d());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OnePoleReport onepole_experiment(const RationalFn& h, const OperatorSymbol& q,
                                 std::span<const unsigned> n_list, std::complex<double> probe,
                                 unsigned precision_bits) {
  if (h.denom_degree() != 1)
    throw std::domain_error("onepole_experiment: the denominator must have exactly one root");
  const unsigned m = q.order(), r = q.vanishing_order();
  if (r == m)
    throw std::domain_error(
        "onepole_experiment: a pure derivative on a single simple pole has constant numerator");

  const RationalFn working = r > 0 ? h.split_polynomial_part().proper_part : h;

  OnePoleReport rep;
  const double abs_cr = std::sqrt(q.first_nonzero().norm2().get_d());
  rep.limit_value = -std::log(abs_cr) / static_cast<double>(m - r);

  for (unsigned n : n_list) {
    IterateResult it = iterate_numerator_closed(working, q, n);
    RootSet rs = solve_exact(it.numer, precision_bits);
    OnePoleRow row;
    row.n = n;
    row.degree = rs.degree();
    row.min_root_modulus = std::numeric_limits<double>::infinity();
    for (const auto& root : rs.to_complex())
      row.min_root_modulus = std::min(row.min_root_modulus, std::abs(root));
    row.shifted_at_probe =
        empirical_potential(to_float_poly(it.numer, precision_bits, true), probe) -
        shift_term(m, r, n, it.degree);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace voroshire
