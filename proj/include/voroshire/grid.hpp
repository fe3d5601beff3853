#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "voroshire/aberth.hpp"
#include "voroshire/voronoi.hpp"

namespace voroshire {

/// Scalar field sampled on a uniform grid with square cells. Nodes where
/// the sampled value was non-finite (or below the storage floor) are
/// clamped to the floor and flagged singular.
struct GridField {
  BoundingBox bbox;
  size_t nx = 0, ny = 0;
  double spacing = 0;
  std::vector<double> values;     // index ix * ny + iy
  std::vector<uint8_t> singular;  // same layout

  double& at(size_t ix, size_t iy) { return values[ix * ny + iy]; }
  double at(size_t ix, size_t iy) const { return values[ix * ny + iy]; }
  bool is_singular(size_t ix, size_t iy) const { return singular[ix * ny + iy] != 0; }
  void flag_singular(size_t ix, size_t iy) { singular[ix * ny + iy] = 1; }
  std::complex<double> node(size_t ix, size_t iy) const {
    return {bbox.x_min + static_cast<double>(ix) * spacing,
            bbox.y_min + static_cast<double>(iy) * spacing};
  }
  size_t singular_count() const;

  /// Flags every node within `cells` grid cells of one of the points.
  void mask_near(const std::vector<std::complex<double>>& points, double cells);
};

inline constexpr double kSingularFloor = -1e12;

/// Uniform sampling of f over the box; requires at least 3x3 nodes and
/// square cells (width/(nx-1) == height/(ny-1) within rounding).
GridField sample_field(const std::function<double(std::complex<double>)>& f,
                       const BoundingBox& bbox, size_t nx, size_t ny,
                       double floor = kSingularFloor);
GridField sample_field_serial(const std::function<double(std::complex<double>)>& f,
                              const BoundingBox& bbox, size_t nx, size_t ny,
                              double floor = kSingularFloor);

/// Five-point-stencil Riesz masses: (laplacian * h^2) / (2 pi) per interior
/// node. Nodes whose stencil touches a singular node are masked and counted
/// rather than summed.
struct CellMassGrid {
  BoundingBox bbox;
  size_t nx = 0, ny = 0;  // interior nodes: indices 1..nx-2, 1..ny-2 of the source field
  double spacing = 0;
  std::vector<double> mass;     // index ix * ny + iy, zero on the boundary ring
  std::vector<uint8_t> masked;  // same layout
  double total = 0;             // sum over unmasked interior nodes
  size_t masked_count = 0;

  double at(size_t ix, size_t iy) const { return mass[ix * ny + iy]; }
  std::complex<double> node(size_t ix, size_t iy) const {
    return {bbox.x_min + static_cast<double>(ix) * spacing,
            bbox.y_min + static_cast<double>(iy) * spacing};
  }
};
CellMassGrid discrete_riesz_measure(const GridField& field);
CellMassGrid discrete_riesz_measure_serial(const GridField& field);

/// area(bbox) * mean |f1 - f2| over nodes unmasked in both fields.
/// Throws when the grids differ.
double l1_box_distance(const GridField& f1, const GridField& f2);

/// Standard smooth bump: exp(1 - 1/(1 - |z-center|^2/radius^2)) inside the
/// disc, 0 outside; peak value 1 at the center.
double bump_value(std::complex<double> z, std::complex<double> center, double radius);
double bump_pairing(const AtomMeasure& mu, std::complex<double> center, double radius);
double bump_pairing(const CellMassGrid& mu, std::complex<double> center, double radius);

}  // namespace voroshire
