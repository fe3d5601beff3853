#include "voroshire/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace voroshire {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BoundingBox BoundingBox::around(std::span<const std::complex<double>> points,
                                double margin_factor) {
  if (points.empty()) throw std::invalid_argument("BoundingBox: no points");
  double x_lo = points[0].real(), x_hi = x_lo, y_lo = points[0].imag(), y_hi = y_lo;
  for (auto p : points) {
    x_lo = std::min(x_lo, p.real());
    x_hi = std::max(x_hi, p.real());
    y_lo = std::min(y_lo, p.imag());
    y_hi = std::max(y_hi, p.imag());
  }
  std::complex<double> center{(x_lo + x_hi) / 2, (y_lo + y_hi) / 2};
  double half = std::max({x_hi - x_lo, y_hi - y_lo, 1.0}) * margin_factor / 2;
  return square(center, half);
}

BoundingBox BoundingBox::square(std::complex<double> center, double half_width) {
  return {center.real() - half_width, center.real() + half_width, center.imag() - half_width,
          center.imag() + half_width};
}

PoleSet::PoleSet(std::vector<std::complex<double>> sites, double min_separation)
    : sites_(std::move(sites)) {
  if (sites_.empty()) throw std::invalid_argument("PoleSet: empty site list");
  for (size_t i = 0; i < sites_.size(); ++i)
    for (size_t j = i + 1; j < sites_.size(); ++j)
      if (std::abs(sites_[i] - sites_[j]) <= min_separation)
        throw std::invalid_argument("PoleSet: sites must be pairwise distinct");
}

double PoleSet::max_modulus() const {
  double m = 0;
  for (auto z : sites_) m = std::max(m, std::abs(z));
  return m;
}

double PoleSet::diameter() const {
  double d = 0;
  for (size_t i = 0; i < sites_.size(); ++i)
    for (size_t j = i + 1; j < sites_.size(); ++j)
      d = std::max(d, std::abs(sites_[i] - sites_[j]));
  return d;
}

std::complex<double> PoleSet::centroid() const {
  std::complex<double> c;
  for (auto z : sites_) c += z;
  return c / static_cast<double>(sites_.size());
}

double psi(const PoleSet& S, std::complex<double> z) {
  double best = kInf;
  for (auto s : S.sites()) best = std::min(best, std::abs(z - s));
  return best;
}

std::vector<size_t> nearest_sites(const PoleSet& S, std::complex<double> z, double rel_tol) {
  const double d = psi(S, z);
  std::vector<size_t> out;
  for (size_t i = 0; i < S.size(); ++i)
    if (std::abs(z - S.site(i)) <= (1 + rel_tol) * d) out.push_back(i);
  return out;
}

namespace {

// Clip the parameter interval of a line {base + t*dir} to a box
// (Liang-Barsky style). Returns false when the intersection is empty.
bool clip_to_box(const VoronoiEdge& e, const BoundingBox& box, double& lo, double& hi) {
  lo = e.t_lo;
  hi = e.t_hi;
  const double p[4] = {-e.dir.real(), e.dir.real(), -e.dir.imag(), e.dir.imag()};
  const double q[4] = {e.base.real() - box.x_min, box.x_max - e.base.real(),
                       e.base.imag() - box.y_min, box.y_max - e.base.imag()};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0) return false;
    } else {
      double t = q[k] / p[k];
      if (p[k] < 0)
        lo = std::max(lo, t);
      else
        hi = std::min(hi, t);
    }
  }
  return lo < hi;
}

}  // namespace

VoronoiDiagram build_voronoi(const PoleSet& S, const BoundingBox& bbox) {
  const size_t b = S.size();
  const double scale = std::max(1.0, S.diameter());
  const double eps = 1e-12 * scale;

  std::vector<VoronoiEdge> edges;
  for (size_t i = 0; i < b; ++i) {
    for (size_t j = i + 1; j < b; ++j) {
      const std::complex<double> zi = S.site(i), zj = S.site(j);
      VoronoiEdge e;
      e.site_i = i;
      e.site_j = j;
      e.base = (zi + zj) / 2.0;
      e.dir = (zj - zi) * std::complex<double>(0, 1);
      e.dir /= std::abs(e.dir);
      e.t_lo = -kInf;
      e.t_hi = kInf;

      // |p - z_i|^2 <= |p - z_k|^2 is linear in t along the bisector
      bool feasible = true;
      for (size_t k = 0; k < b && feasible; ++k) {
        if (k == i || k == j) continue;
        const std::complex<double> w = std::conj(S.site(k)) - std::conj(zi);
        const double alpha = 2.0 * (e.base * w).real();
        const double beta = 2.0 * (e.dir * w).real();
        const double gamma = std::norm(S.site(k)) - std::norm(zi);
        if (std::abs(beta) < 1e-14 * scale) {
          feasible = alpha <= gamma + eps;
        } else {
          const double t = (gamma - alpha) / beta;
          if (beta > 0)
            e.t_hi = std::min(e.t_hi, t);
          else
            e.t_lo = std::max(e.t_lo, t);
        }
      }
      if (!feasible || e.t_hi - e.t_lo <= eps) continue;

      double clo, chi;
      if (clip_to_box(e, bbox, clo, chi))
        e.clipped = std::make_pair(e.point_at(clo), e.point_at(chi));
      edges.push_back(e);
    }
  }

  // vertices: finite edge endpoints, deduplicated, annotated with tied sites
  std::vector<VoronoiVertex> vertices;
  const double dedup_tol = 1e-9 * scale;
  auto add_vertex = [&](std::complex<double> p) {
    for (const auto& v : vertices)
      if (std::abs(v.position - p) <= dedup_tol) return;
    VoronoiVertex v;
    v.position = p;
    v.sites = nearest_sites(S, p, 1e-9);
    if (v.sites.size() >= 3) vertices.push_back(std::move(v));
  };
  for (const auto& e : edges) {
    if (std::isfinite(e.t_lo)) add_vertex(e.point_at(e.t_lo));
    if (std::isfinite(e.t_hi)) add_vertex(e.point_at(e.t_hi));
  }

  return {S, std::move(edges), std::move(vertices), bbox};
}

double dist_to_skeleton(const VoronoiDiagram& V, std::complex<double> z) {
  if (V.edges().empty()) return kInf;
  double best = kInf;
  for (const auto& e : V.edges()) {
    double t = ((z - e.base) * std::conj(e.dir)).real();
    t = std::clamp(t, e.t_lo, e.t_hi);
    best = std::min(best, std::abs(z - e.point_at(t)));
  }
  return best;
}

PointClassification classify_point(const VoronoiDiagram& V, std::complex<double> z,
                                   double rel_tol) {
  PointClassification out;
  out.tied_sites = nearest_sites(V.sites(), z, rel_tol);
  out.on_skeleton = out.tied_sites.size() >= 2;
  if (!out.on_skeleton) out.cell = out.tied_sites.front();
  return out;
}

}  // namespace voroshire
