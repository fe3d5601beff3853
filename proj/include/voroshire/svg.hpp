#pragma once

#include <complex>
#include <string>
#include <vector>

#include "voroshire/voronoi.hpp"

namespace voroshire {

/// Line-and-scatter SVG canvas over a world-coordinate box (y up).
class SvgCanvas {
 public:
  SvgCanvas(const BoundingBox& world, int pixels = 800, int margin = 40);

  void add_line(std::complex<double> a, std::complex<double> b, const std::string& stroke,
                double width = 1.0);
  void add_circle(std::complex<double> center, double radius_px, const std::string& fill);
  void add_text(std::complex<double> anchor, const std::string& text, int font_px = 12);

  std::string finish() const;

 private:
  std::pair<double, double> to_px(std::complex<double> z) const;
  BoundingBox world_;
  int pixels_, margin_;
  double scale_;
  std::vector<std::string> elements_;
};

/// Skeleton edges (clipped to the diagram's box) plus pole dots.
std::string voronoi_svg(const VoronoiDiagram& V);

/// Same scene with a root scatter overlaid.
std::string overlay_svg(const VoronoiDiagram& V, const std::vector<std::complex<double>>& roots);

}  // namespace voroshire
