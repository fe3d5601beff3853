#include "voroshire/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace voroshire {

size_t GridField::singular_count() const {
  size_t n = 0;
  for (uint8_t s : singular) n += s;
  return n;
}

void GridField::mask_near(const std::vector<std::complex<double>>& points, double cells) {
  const double radius = cells * spacing;
  for (auto p : points) {
    if (!bbox.contains(p)) continue;
    const long ix0 = std::lround((p.real() - bbox.x_min) / spacing);
    const long iy0 = std::lround((p.imag() - bbox.y_min) / spacing);
    const long reach = static_cast<long>(std::ceil(cells)) + 1;
    for (long ix = std::max(0L, ix0 - reach); ix <= std::min<long>(nx - 1, ix0 + reach); ++ix)
      for (long iy = std::max(0L, iy0 - reach); iy <= std::min<long>(ny - 1, iy0 + reach); ++iy)
        if (std::abs(node(ix, iy) - p) <= radius) flag_singular(ix, iy);
  }
}

namespace {

GridField make_grid(const BoundingBox& bbox, size_t nx, size_t ny) {
  if (nx < 3 || ny < 3) throw std::invalid_argument("sample_field: need at least a 3x3 grid");
  const double hx = bbox.width() / static_cast<double>(nx - 1);
  const double hy = bbox.height() / static_cast<double>(ny - 1);
  if (std::abs(hx - hy) > 1e-9 * std::max(hx, hy))
    throw std::invalid_argument("sample_field: cells must be square");
  GridField g;
  g.bbox = bbox;
  g.nx = nx;
  g.ny = ny;
  g.spacing = hx;
  g.values.assign(nx * ny, 0.0);
  g.singular.assign(nx * ny, 0);
  return g;
}

inline void store_sample(GridField& g, size_t ix, size_t iy, double v, double floor) {
  if (!std::isfinite(v) || v < floor) {
    g.at(ix, iy) = floor;
    g.flag_singular(ix, iy);
  } else {
    g.at(ix, iy) = v;
  }
}

}  // namespace

GridField sample_field(const std::function<double(std::complex<double>)>& f,
                       const BoundingBox& bbox, size_t nx, size_t ny, double floor) {
  GridField g = make_grid(bbox, nx, ny);
#pragma omp parallel for schedule(static)
  for (long ix = 0; ix < static_cast<long>(nx); ++ix)
    for (size_t iy = 0; iy < ny; ++iy)
      store_sample(g, static_cast<size_t>(ix), iy, f(g.node(ix, iy)), floor);
  return g;
}

GridField sample_field_serial(const std::function<double(std::complex<double>)>& f,
                              const BoundingBox& bbox, size_t nx, size_t ny, double floor) {
  GridField g = make_grid(bbox, nx, ny);
  for (size_t ix = 0; ix < nx; ++ix)
    for (size_t iy = 0; iy < ny; ++iy) store_sample(g, ix, iy, f(g.node(ix, iy)), floor);
  return g;
}

namespace {

CellMassGrid riesz_impl(const GridField& f, bool parallel) {
  CellMassGrid out;
  out.bbox = f.bbox;
  out.nx = f.nx;
  out.ny = f.ny;
  out.spacing = f.spacing;
  out.mass.assign(f.nx * f.ny, 0.0);
  out.masked.assign(f.nx * f.ny, 0);

  const double inv_two_pi = 1.0 / (2.0 * std::numbers::pi);
  auto node_mass = [&](size_t ix, size_t iy) {
    if (f.is_singular(ix, iy) || f.is_singular(ix - 1, iy) || f.is_singular(ix + 1, iy) ||
        f.is_singular(ix, iy - 1) || f.is_singular(ix, iy + 1)) {
      out.masked[ix * f.ny + iy] = 1;
      return;
    }
    // laplacian * h^2 needs no division: the stencil sum already carries h^2
    const double stencil = f.at(ix + 1, iy) + f.at(ix - 1, iy) + f.at(ix, iy + 1) +
                           f.at(ix, iy - 1) - 4.0 * f.at(ix, iy);
    out.mass[ix * f.ny + iy] = stencil * inv_two_pi;
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long ix = 1; ix < static_cast<long>(f.nx) - 1; ++ix)
      for (size_t iy = 1; iy + 1 < f.ny; ++iy) node_mass(static_cast<size_t>(ix), iy);
  } else {
    for (size_t ix = 1; ix + 1 < f.nx; ++ix)
      for (size_t iy = 1; iy + 1 < f.ny; ++iy) node_mass(ix, iy);
  }

  // serial reduction keeps the total bit-for-bit reproducible
  for (size_t ix = 1; ix + 1 < f.nx; ++ix)
    for (size_t iy = 1; iy + 1 < f.ny; ++iy) {
      if (out.masked[ix * f.ny + iy])
        ++out.masked_count;
      else
        out.total += out.mass[ix * f.ny + iy];
    }
  return out;
}

}  // namespace

CellMassGrid discrete_riesz_measure(const GridField& field) { return riesz_impl(field, true); }
CellMassGrid discrete_riesz_measure_serial(const GridField& field) {
  return riesz_impl(field, false);
}

double l1_box_distance(const GridField& f1, const GridField& f2) {
  if (f1.nx != f2.nx || f1.ny != f2.ny || f1.bbox.x_min != f2.bbox.x_min ||
      f1.bbox.x_max != f2.bbox.x_max || f1.bbox.y_min != f2.bbox.y_min ||
      f1.bbox.y_max != f2.bbox.y_max)
    throw std::invalid_argument("l1_box_distance: grid mismatch");
  double sum = 0;
  size_t count = 0;
  for (size_t k = 0; k < f1.values.size(); ++k) {
    if (f1.singular[k] || f2.singular[k]) continue;
    sum += std::abs(f1.values[k] - f2.values[k]);
    ++count;
  }
  if (count == 0) return 0;
  return f1.bbox.width() * f1.bbox.height() * sum / static_cast<double>(count);
}

double bump_value(std::complex<double> z, std::complex<double> center, double radius) {
  const double rho2 = std::norm(z - center) / (radius * radius);
  if (rho2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - rho2));
}

double bump_pairing(const AtomMeasure& mu, std::complex<double> center, double radius) {
  double sum = 0;
  for (const auto& atom : mu.atoms)
    sum += atom.weight.get_d() * bump_value(atom.position, center, radius);
  return sum;
}

double bump_pairing(const CellMassGrid& mu, std::complex<double> center, double radius) {
  double sum = 0;
  for (size_t ix = 1; ix + 1 < mu.nx; ++ix)
    for (size_t iy = 1; iy + 1 < mu.ny; ++iy) {
      if (mu.masked[ix * mu.ny + iy]) continue;
      const double phi = bump_value(mu.node(ix, iy), center, radius);
      if (phi > 0) sum += mu.at(ix, iy) * phi;
    }
  return sum;
}

}  // namespace voroshire
