#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace voroshire {

struct BoundingBox {
  double x_min = -1, x_max = 1, y_min = -1, y_max = 1;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(std::complex<double> z) const {
    return z.real() >= x_min && z.real() <= x_max && z.imag() >= y_min && z.imag() <= y_max;
  }
  /// Smallest square box holding all points, inflated by margin_factor.
  static BoundingBox around(std::span<const std::complex<double>> points, double margin_factor);
  static BoundingBox square(std::complex<double> center, double half_width);
};

/// Finite set of pairwise-distinct sites (the poles).
class PoleSet {
 public:
  explicit PoleSet(std::vector<std::complex<double>> sites, double min_separation = 1e-12);

  size_t size() const { return sites_.size(); }
  const std::vector<std::complex<double>>& sites() const { return sites_; }
  std::complex<double> site(size_t i) const { return sites_[i]; }
  double max_modulus() const;
  double diameter() const;
  std::complex<double> centroid() const;

 private:
  std::vector<std::complex<double>> sites_;
};

/// min_i |z - z_i|
double psi(const PoleSet& S, std::complex<double> z);

/// Indices i with |z - z_i| <= (1 + rel_tol) * psi(z). A singleton exactly
/// when z sits in an open cell at the working tolerance.
std::vector<size_t> nearest_sites(const PoleSet& S, std::complex<double> z, double rel_tol);

/// Portion of the bisector of (site_i, site_j) where both are jointly
/// nearest: {base + t*dir : t in [t_lo, t_hi]}, with infinite ends for
/// unbounded edges. clipped holds the geometry intersected with the drawing
/// box; distance queries always use the unclipped edge.
struct VoronoiEdge {
  size_t site_i = 0, site_j = 0;
  std::complex<double> base, dir;  // |dir| = 1
  double t_lo = 0, t_hi = 0;
  std::optional<std::pair<std::complex<double>, std::complex<double>>> clipped;

  bool bounded() const { return std::isfinite(t_lo) && std::isfinite(t_hi); }
  std::complex<double> point_at(double t) const { return base + t * dir; }
};

struct VoronoiVertex {
  std::complex<double> position;
  std::vector<size_t> sites;  // >= 3 jointly nearest
};

class VoronoiDiagram {
 public:
  VoronoiDiagram(PoleSet sites, std::vector<VoronoiEdge> edges,
                 std::vector<VoronoiVertex> vertices, BoundingBox bbox)
      : sites_(std::move(sites)),
        edges_(std::move(edges)),
        vertices_(std::move(vertices)),
        bbox_(bbox) {}

  const PoleSet& sites() const { return sites_; }
  const std::vector<VoronoiEdge>& edges() const { return edges_; }
  const std::vector<VoronoiVertex>& vertices() const { return vertices_; }
  const BoundingBox& bbox() const { return bbox_; }

 private:
  PoleSet sites_;
  std::vector<VoronoiEdge> edges_;
  std::vector<VoronoiVertex> vertices_;
  BoundingBox bbox_;
};

/// O(b^2) per pair: each candidate bisector is cut down by the half-plane
/// constraints of the remaining sites; robust at desk scale.
VoronoiDiagram build_voronoi(const PoleSet& S, const BoundingBox& bbox);

/// Euclidean distance to the union of (unclipped) edges; +infinity when the
/// diagram has no edges (single site).
double dist_to_skeleton(const VoronoiDiagram& V, std::complex<double> z);

struct PointClassification {
  bool on_skeleton = false;
  size_t cell = 0;                 // meaningful when !on_skeleton
  std::vector<size_t> tied_sites;  // all jointly nearest sites
};
PointClassification classify_point(const VoronoiDiagram& V, std::complex<double> z,
                                   double rel_tol = 1e-9);

}  // namespace voroshire
