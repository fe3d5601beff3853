#include "voroshire/aberth.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace voroshire {

std::vector<std::complex<double>> RootSet::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.to_complex());
  return out;
}

namespace {

struct Bounds {
  double outer, inner;  // all root moduli lie in [inner, outer]
};

// Fujiwara-type bounds from coefficient magnitudes, evaluated in log space;
// coefficients can span hundreds of orders of magnitude.
Bounds root_bounds(const std::vector<BigComplex>& c) {
  const size_t d = c.size() - 1;
  std::vector<double> lg(c.size());
  for (size_t k = 0; k < c.size(); ++k)
    lg[k] = c[k].is_zero() ? -std::numeric_limits<double>::infinity()
                           : log(c[k].abs()).to_double();
  double outer = 0.0;
  for (size_t k = 0; k < d; ++k) {
    if (!std::isfinite(lg[k])) continue;
    outer = std::max(outer, std::exp((lg[k] - lg[d]) / static_cast<double>(d - k)));
  }
  double rev = 0.0;  // same bound for the reversed polynomial -> inverse roots
  for (size_t k = 1; k <= d; ++k) {
    if (!std::isfinite(lg[k])) continue;
    rev = std::max(rev, std::exp((lg[k] - lg[0]) / static_cast<double>(k)));
  }
  Bounds b;
  b.outer = 2.0 * outer;
  b.inner = rev > 0 ? 1.0 / (2.0 * rev) : b.outer * 1e-3;
  if (!(b.inner > 0) || b.inner > b.outer) b.inner = b.outer * 1e-3;
  return b;
}

// Deterministic golden-angle spiral across the root annulus.
std::vector<BigComplex> initial_guesses(size_t count, const Bounds& b) {
  constexpr double golden = 0.6180339887498949;
  std::vector<BigComplex> out;
  out.reserve(count);
  const double lr = std::log(b.inner), dr = std::log(b.outer) - lr;
  for (size_t j = 0; j < count; ++j) {
    double radius = std::exp(lr + dr * ((j + 0.5) / static_cast<double>(count)));
    double angle = 2.0 * std::numbers::pi * std::fmod(golden * static_cast<double>(j), 1.0) + 0.4;
    out.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
  }
  return out;
}

struct Deflated {
  std::vector<BigComplex> coeffs;
  size_t zeros_at_origin = 0;
};

Deflated deflate_origin(const FloatPoly& p) {
  Deflated d;
  size_t first = 0;
  while (first < p.coeffs.size() - 1 && p.coeffs[first].is_zero()) ++first;
  d.zeros_at_origin = first;
  d.coeffs.assign(p.coeffs.begin() + static_cast<long>(first), p.coeffs.end());
  return d;
}

RootSet aberth_solve(const FloatPoly& p, const AberthOptions& opts, bool jacobi) {
  if (p.degree() < 1) throw std::domain_error("find_roots: degree must be at least 1");
  const unsigned prec = p.precision_bits;
  BigFloat::PrecisionGuard guard(prec);

  Deflated work = deflate_origin(p);
  const size_t d = work.coeffs.size() - 1;

  RootSet rs;
  rs.precision_bits = prec;

  std::vector<BigComplex> x;
  if (d > 0) {
    FloatPoly q;
    q.coeffs = work.coeffs;
    q.precision_bits = prec;
    const Bounds bounds = root_bounds(q.coeffs);
    x = initial_guesses(d, bounds);

    // stop on tiny steps, or once steps sit on the roundoff plateau (they
    // stall around 2^-prec * conditioning, which can be far above 2^-prec)
    const double eps_hard = std::ldexp(1.0, -static_cast<int>(prec) + 16);
    const double plateau_gate = std::ldexp(1.0, -static_cast<int>(prec) / 3);
    double best_step = std::numeric_limits<double>::infinity();
    int stalled_sweeps = 0;
    const BigFloat floor_scale(bounds.inner);
    bool converged = false;

    std::vector<BigComplex> next(d);
    std::vector<double> step(d, 0.0);
    unsigned sweep = 0;
    for (; sweep < opts.max_iterations; ++sweep) {
      if (jacobi) {
#pragma omp parallel
        {
          BigFloat::set_default_precision(prec);
#pragma omp for schedule(static)
          for (long i = 0; i < static_cast<long>(d); ++i) {
            auto [pv, dv] = q.evaluate_with_derivative(x[i]);
            if (pv.is_zero()) {
              next[i] = x[i];
              step[i] = 0.0;
              continue;
            }
            BigComplex repulsion;
            for (size_t j = 0; j < d; ++j) {
              if (j == static_cast<size_t>(i)) continue;
              BigComplex diff = x[i] - x[j];
              if (diff.is_zero()) continue;  // collision; jitter below
              repulsion += BigComplex(1.0) / diff;
            }
            BigComplex newton = dv.is_zero() ? BigComplex(0.0) : pv / dv;
            BigComplex denom = BigComplex(1.0) - newton * repulsion;
            BigComplex corr = denom.is_zero() ? newton : newton / denom;
            if (dv.is_zero() && !pv.is_zero())
              corr = BigComplex(0.5, 0.25) * (x[i].abs() + floor_scale);
            next[i] = x[i] - corr;
            step[i] = (corr.abs() / (x[i].abs() + floor_scale)).to_double();
          }
        }
        for (size_t i = 0; i < d; ++i) x[i] = next[i];
      } else {
        for (size_t i = 0; i < d; ++i) {
          auto [pv, dv] = q.evaluate_with_derivative(x[i]);
          if (pv.is_zero()) {
            step[i] = 0.0;
            continue;
          }
          BigComplex repulsion;
          for (size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            BigComplex diff = x[i] - x[j];
            if (diff.is_zero()) continue;
            repulsion += BigComplex(1.0) / diff;
          }
          BigComplex newton = dv.is_zero() ? BigComplex(0.0) : pv / dv;
          BigComplex denom = BigComplex(1.0) - newton * repulsion;
          BigComplex corr = denom.is_zero() ? newton : newton / denom;
          if (dv.is_zero() && !pv.is_zero())
            corr = BigComplex(0.5, 0.25) * (x[i].abs() + floor_scale);
          step[i] = (corr.abs() / (x[i].abs() + floor_scale)).to_double();
          x[i] -= corr;
        }
      }

      // resolve exact collisions deterministically
      for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
          if ((x[i] - x[j]).is_zero()) {
            double angle = 0.7 + static_cast<double>(j);
            BigFloat mag = (x[j].abs() + floor_scale) * BigFloat(std::ldexp(1.0, -static_cast<int>(prec) / 2));
            x[j] += BigComplex(std::cos(angle), std::sin(angle)) * mag;
          }

      const double max_step = *std::max_element(step.begin(), step.end());
      if (max_step < eps_hard) {
        converged = true;
        ++sweep;
        break;
      }
      if (max_step < plateau_gate) {
        if (max_step < 0.5 * best_step) {
          stalled_sweeps = 0;
        } else if (++stalled_sweeps >= 4) {
          converged = true;
          ++sweep;
          break;
        }
        best_step = std::min(best_step, max_step);
      }
    }
    rs.iterations = sweep;
    if (!converged)
      throw NonConvergenceError("find_roots: no convergence within " +
                                    std::to_string(opts.max_iterations) + " sweeps at " +
                                    std::to_string(prec) + " bits",
                                prec);

    // normalized backward residuals
    std::vector<BigFloat> mag(q.coeffs.size());
    for (size_t k = 0; k < q.coeffs.size(); ++k) mag[k] = q.coeffs[k].abs();
    for (size_t i = 0; i < d; ++i) {
      BigFloat ax = x[i].abs();
      BigFloat scale;
      for (size_t k = mag.size(); k-- > 0;) scale = scale * ax + mag[k];
      double res = (q.evaluate(x[i]).abs() / scale).to_double();
      rs.residuals.push_back(res);
    }
  }

  for (size_t k = 0; k < work.zeros_at_origin; ++k) {
    x.emplace_back(0.0, 0.0);
    rs.residuals.push_back(0.0);
  }

  std::vector<size_t> order(x.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (x[a].re() != x[b].re()) return x[a].re() < x[b].re();
    return x[a].im() < x[b].im();
  });
  RootSet sorted;
  sorted.precision_bits = rs.precision_bits;
  sorted.iterations = rs.iterations;
  for (size_t i : order) {
    sorted.roots.push_back(x[i]);
    sorted.residuals.push_back(rs.residuals[i]);
  }
  sorted.max_residual =
      sorted.residuals.empty() ? 0.0 : *std::max_element(sorted.residuals.begin(), sorted.residuals.end());
  if (sorted.max_residual > opts.residual_tol)
    throw NonConvergenceError("find_roots: residual " + std::to_string(sorted.max_residual) +
                                  " above tolerance at " + std::to_string(prec) + " bits",
                              prec);
  return sorted;
}

}  // namespace

RootSet find_roots(const FloatPoly& p, const AberthOptions& opts) {
  return aberth_solve(p, opts, /*jacobi=*/true);
}

RootSet find_roots_serial(const FloatPoly& p, const AberthOptions& opts) {
  return aberth_solve(p, opts, /*jacobi=*/false);
}

VietaReport vieta_check(const RootSet& rs, const FloatPoly& p) {
  BigFloat::PrecisionGuard guard(p.precision_bits);
  const size_t d = p.coeffs.size() - 1;
  VietaReport rep;
  BigComplex sum, prod(1.0);
  BigFloat mod_sum;
  for (const auto& r : rs.roots) {
    sum += r;
    prod *= r;
    mod_sum += r.abs();
  }
  BigComplex sum_exp = -(p.coeffs[d - 1] / p.coeffs[d]);
  BigComplex prod_exp = p.coeffs[0] / p.coeffs[d];
  if (d % 2 == 1) prod_exp = -prod_exp;

  rep.sum = sum.to_complex();
  rep.sum_expected = sum_exp.to_complex();
  rep.product = prod.to_complex();
  rep.product_expected = prod_exp.to_complex();

  BigFloat one(1.0);
  rep.sum_rel_err = ((sum - sum_exp).abs() / max(mod_sum, one)).to_double();
  BigFloat prod_scale = max(prod.abs(), max(prod_exp.abs(), one));
  rep.product_rel_err = ((prod - prod_exp).abs() / prod_scale).to_double();
  return rep;
}

RootSet solve_exact(const ExactPoly& p, unsigned precision_bits, const AberthOptions& opts,
                    unsigned max_precision_bits) {
  unsigned bits = precision_bits;
  while (true) {
    try {
      return find_roots(to_float_poly(p, bits, /*normalize=*/true), opts);
    } catch (const NonConvergenceError&) {
      if (bits >= max_precision_bits) throw;
      bits *= 2;
    }
  }
}

AtomMeasure empirical_measure(const RootSet& rs) {
  AtomMeasure out;
  const size_t degree = rs.roots.size();
  out.total_mass = 0;
  if (degree == 0) return out;

  const double merge_tol = std::ldexp(1.0, -static_cast<int>(rs.precision_bits) / 4);
  std::vector<std::complex<double>> pts = rs.to_complex();
  std::vector<size_t> parent(degree);
  for (size_t i = 0; i < degree; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < degree; ++i)
    for (size_t j = i + 1; j < degree; ++j)
      if (std::abs(pts[i] - pts[j]) < merge_tol) parent[find(i)] = find(j);

  std::vector<std::vector<size_t>> groups(degree);
  for (size_t i = 0; i < degree; ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    std::complex<double> center;
    for (size_t i : g) center += pts[i];
    center /= static_cast<double>(g.size());
    WeightedAtom atom;
    atom.position = center;
    atom.multiplicity = g.size();
    atom.weight = mpq_class(static_cast<long>(g.size()), static_cast<long>(degree));
    atom.weight.canonicalize();
    out.total_mass += atom.weight;
    if (g.size() > 1) ++out.merged_clusters;
    out.atoms.push_back(std::move(atom));
  }
  std::sort(out.atoms.begin(), out.atoms.end(), [](const WeightedAtom& a, const WeightedAtom& b) {
    if (a.position.real() != b.position.real()) return a.position.real() < b.position.real();
    return a.position.imag() < b.position.imag();
  });
  return out;
}

}  // namespace voroshire
