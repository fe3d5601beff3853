#include "voroshire/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace voroshire {

namespace {
std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}
}  // namespace

SvgCanvas::SvgCanvas(const BoundingBox& world, int pixels, int margin)
    : world_(world), pixels_(pixels), margin_(margin) {
  const double span = std::max(world.width(), world.height());
  scale_ = (pixels - 2.0 * margin) / span;
}

std::pair<double, double> SvgCanvas::to_px(std::complex<double> z) const {
  return {margin_ + (z.real() - world_.x_min) * scale_,
          pixels_ - margin_ - (z.imag() - world_.y_min) * scale_};
}

void SvgCanvas::add_line(std::complex<double> a, std::complex<double> b,
                         const std::string& stroke, double width) {
  auto [x1, y1] = to_px(a);
  auto [x2, y2] = to_px(b);
  elements_.push_back("<line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) +
                      "\" y2=\"" + px(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                      px(width) + "\"/>");
}

void SvgCanvas::add_circle(std::complex<double> center, double radius_px,
                           const std::string& fill) {
  auto [cx, cy] = to_px(center);
  elements_.push_back("<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + px(radius_px) +
                      "\" fill=\"" + fill + "\"/>");
}

void SvgCanvas::add_text(std::complex<double> anchor, const std::string& text, int font_px) {
  auto [x, y] = to_px(anchor);
  elements_.push_back("<text x=\"" + px(x) + "\" y=\"" + px(y) + "\" font-size=\"" +
                      std::to_string(font_px) + "\" font-family=\"monospace\">" + text +
                      "</text>");
}

std::string SvgCanvas::finish() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(pixels_) + "\" height=\"" + std::to_string(pixels_) +
                    "\" viewBox=\"0 0 " + std::to_string(pixels_) + " " +
                    std::to_string(pixels_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : elements_) {
    out += e;
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

std::string voronoi_svg(const VoronoiDiagram& V) {
  SvgCanvas canvas(V.bbox());
  for (const auto& e : V.edges())
    if (e.clipped) canvas.add_line(e.clipped->first, e.clipped->second, "#404040", 1.2);
  for (const auto& v : V.vertices()) canvas.add_circle(v.position, 2.5, "#808080");
  for (auto s : V.sites().sites()) canvas.add_circle(s, 4.5, "red");
  return canvas.finish();
}

std::string overlay_svg(const VoronoiDiagram& V, const std::vector<std::complex<double>>& roots) {
  SvgCanvas canvas(V.bbox());
  for (const auto& e : V.edges())
    if (e.clipped) canvas.add_line(e.clipped->first, e.clipped->second, "#b0b0b0", 1.0);
  for (auto r : roots)
    if (V.bbox().contains(r)) canvas.add_circle(r, 1.8, "#1040c0");
  for (auto s : V.sites().sites()) canvas.add_circle(s, 4.5, "red");
  return canvas.finish();
}

}  // namespace voroshire
