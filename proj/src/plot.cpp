#include "rgcone/plot.hpp"

#include <cmath>
#include <cstdio>

#include "rgcone/errors.hpp"

namespace rgcone {

namespace {

constexpr double kSize = 480;

struct Frame {
  double scale;
  double x(double v) const { return kSize / 2 + v * scale; }
  double y(double v) const { return kSize / 2 - v * scale; }
};

std::string circle(const Frame& fr, double x, double y, double r, const char* color) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\"/>\n", fr.x(x), fr.y(y), r, color);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c, double d) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Segment from the origin along direction (dx, dy) to the frame edge.
std::string ray_line(const Frame& fr, double dx, double dy, double extent, const char* style) {
  double len = std::hypot(dx, dy);
  double t = extent * 1.5 / len;
  return fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" ", fr.x(0), fr.y(0), fr.x(dx * t), fr.y(dy * t)) +
         style + "/>\n";
}

}  // namespace

std::string plot_2d_svg(const GeneratingSet& gs, long extent) {
  if (gs.cone->dim() != 2) throw Error(ErrorCode::InvalidArgument, "plots are planar only");
  if (extent < 1) throw Error(ErrorCode::InvalidArgument, "plot extent must be positive");
  const double e = static_cast<double>(extent);
  Frame fr{kSize / (2 * e + 2)};
  std::string s = fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                      kSize, kSize, kSize, kSize);
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<clipPath id=\"box\"><rect width=\"100%\" height=\"100%\"/></clipPath>\n<g clip-path=\"url(#box)\">\n";

  for (const auto& p : gs.pieces) {
    auto rays = p.P.rays();
    if (rays.size() == 2) {
      double t = 3 * e;
      char buf[256];
      std::snprintf(buf, sizeof buf, "<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f\" fill=\"#cfe3f7\" stroke=\"none\"/>\n",
                    fr.x(0), fr.y(0), fr.x(static_cast<double>(rays[0][0]) * t), fr.y(static_cast<double>(rays[0][1]) * t),
                    fr.x(static_cast<double>(rays[1][0]) * t), fr.y(static_cast<double>(rays[1][1]) * t));
      s += buf;
    }
  }
  for (const auto& r : gs.cone->rays())
    s += ray_line(fr, r[0].to_double(), r[1].to_double(), e, "stroke=\"black\" stroke-width=\"2\"");
  if (gs.cone->kind() == ConeKind::Halfspace) {
    const auto& r = gs.cone->rays()[0];
    s += ray_line(fr, -r[0].to_double(), -r[1].to_double(), e, "stroke=\"black\" stroke-width=\"2\"");
  }

  const auto R = gs.elements();
  if (!gs.generators.empty() && !R.empty()) {
    ZVector x = R.front();
    std::vector<long> up(gs.generators.size(), 0), down(gs.generators.size(), 0);
    up[0] = 1;
    down[0] = -1;
    for (const auto& w : {up, down}) {
      ZVector y = x;
      for (int k = 0; k < 6; ++k) {
        ZVector z = apply_word(gs, w, y);
        if (std::fabs(z[0].get_d()) > 4 * e || std::fabs(z[1].get_d()) > 4 * e) break;
        s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#d95f02\" stroke-dasharray=\"4 3\"/>\n",
                 fr.x(y[0].get_d()), fr.y(y[1].get_d()), fr.x(z[0].get_d()), fr.y(z[1].get_d()));
        s += circle(fr, z[0].get_d(), z[1].get_d(), 3, "#d95f02");
        y = z;
      }
    }
  }
  for (const auto& r : R)
    s += circle(fr, r[0].get_d(), r[1].get_d(), 4, "#1b4f9c");
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace rgcone
