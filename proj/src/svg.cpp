#include "morley/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace morley {

namespace {

struct Mapper {
  double scale = 1.0, ox = 0.0, oy = 0.0, height = 0.0;

  // world to canvas; SVG y grows downward
  double mx(double x) const { return ox + scale * x; }
  double my(double y) const { return height - (oy + scale * y); }
};

std::string num(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void seg(std::string& out, const Mapper& m, Point a, Point b, const char* cls, double width) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<line class=\"%s\" x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" "
                "stroke-width=\"%s\"/>\n",
                cls, num(m.mx(a.x)).c_str(), num(m.my(a.y)).c_str(), num(m.mx(b.x)).c_str(),
                num(m.my(b.y)).c_str(), num(width).c_str());
  out += buf;
}

}  // namespace

std::string render_svg(const MorleyConfiguration& cfg, const RenderStyle& style) {
  if (style.width <= 0 || style.height <= 0 || style.margin < 0.0 || style.margin >= 0.4)
    throw GeomError(GeomErrc::invalid_parameters, "render_svg: bad canvas or margin");

  const Point A = cfg.A(), B = cfg.B(), C = cfg.C(), X = cfg.X(), Y = cfg.Y(), Z = cfg.Z(),
              D = cfg.D(), E = cfg.E(), F = cfg.F(), P = cfg.P(), Q = cfg.Q(), R = cfg.R();

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const Point& p : cfg.points()) grow(p.x, p.y);
  if (style.circumcircles) {
    const Point centers[3] = {P, Q, R};
    const double radii[3] = {distance(P, A), distance(Q, B), distance(R, C)};
    for (int i = 0; i < 3; ++i) {
      grow(centers[i].x - radii[i], centers[i].y - radii[i]);
      grow(centers[i].x + radii[i], centers[i].y + radii[i]);
    }
  }

  Mapper m;
  m.height = style.height;
  double usable_w = style.width * (1.0 - 2.0 * style.margin);
  double usable_h = style.height * (1.0 - 2.0 * style.margin);
  double span_x = std::max(xmax - xmin, 1e-12);
  double span_y = std::max(ymax - ymin, 1e-12);
  m.scale = std::min(usable_w / span_x, usable_h / span_y);
  m.ox = (style.width - m.scale * (xmin + xmax)) / 2.0;
  m.oy = (style.height - m.scale * (ymin + ymax)) / 2.0;

  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n"
                "<g fill=\"none\" stroke=\"#222222\">\n",
                style.width, style.height, style.width, style.height);
  out += buf;

  // sides
  seg(out, m, A, B, "side", style.stroke_main);
  seg(out, m, B, C, "side", style.stroke_main);
  seg(out, m, C, A, "side", style.stroke_main);
  // cevians
  seg(out, m, A, X, "cevian", style.stroke_aux);
  seg(out, m, B, Y, "cevian", style.stroke_aux);
  seg(out, m, C, Z, "cevian", style.stroke_aux);
  // construction lines
  if (style.trisectors) {
    seg(out, m, A, Y, "trisector", style.stroke_aux);
    seg(out, m, A, Z, "trisector", style.stroke_aux);
    seg(out, m, B, Z, "trisector", style.stroke_aux);
    seg(out, m, B, X, "trisector", style.stroke_aux);
    seg(out, m, C, X, "trisector", style.stroke_aux);
    seg(out, m, C, Y, "trisector", style.stroke_aux);
  }
  if (style.flanks) {
    seg(out, m, D, Y, "flank", style.stroke_aux);
    seg(out, m, D, Z, "flank", style.stroke_aux);
    seg(out, m, E, Z, "flank", style.stroke_aux);
    seg(out, m, E, X, "flank", style.stroke_aux);
    seg(out, m, F, X, "flank", style.stroke_aux);
    seg(out, m, F, Y, "flank", style.stroke_aux);
  }
  if (style.bisectors) {
    seg(out, m, D, X, "bisector", style.stroke_aux);
    seg(out, m, E, Y, "bisector", style.stroke_aux);
    seg(out, m, F, Z, "bisector", style.stroke_aux);
  }
  if (style.circumcircles) {
    const Point centers[3] = {P, Q, R};
    const double radii[3] = {distance(P, A), distance(Q, B), distance(R, C)};
    for (int i = 0; i < 3; ++i) {
      std::snprintf(buf, sizeof buf,
                    "<circle class=\"circumcircle\" cx=\"%s\" cy=\"%s\" r=\"%s\" "
                    "stroke-width=\"%s\"/>\n",
                    num(m.mx(centers[i].x)).c_str(), num(m.my(centers[i].y)).c_str(),
                    num(m.scale * radii[i]).c_str(), num(style.stroke_aux).c_str());
      out += buf;
    }
  }
  // inner triangle fill
  std::snprintf(buf, sizeof buf,
                "<polygon class=\"xyz\" points=\"%s,%s %s,%s %s,%s\" fill=\"#f2c14e\" "
                "fill-opacity=\"0.65\" stroke=\"#9a6d00\" stroke-width=\"%s\"/>\n",
                num(m.mx(X.x)).c_str(), num(m.my(X.y)).c_str(), num(m.mx(Y.x)).c_str(),
                num(m.my(Y.y)).c_str(), num(m.mx(Z.x)).c_str(), num(m.my(Z.y)).c_str(),
                num(style.stroke_main).c_str());
  out += buf;
  // points
  for (size_t i = 0; i < 12; ++i) {
    const Point& p = cfg.points()[i];
    std::snprintf(buf, sizeof buf,
                  "<circle class=\"pt\" cx=\"%s\" cy=\"%s\" r=\"3.5\" fill=\"#222222\"/>\n",
                  num(m.mx(p.x)).c_str(), num(m.my(p.y)).c_str());
    out += buf;
  }
  // labels
  if (style.labels) {
    for (size_t i = 0; i < 12; ++i) {
      const Point& p = cfg.points()[i];
      std::snprintf(buf, sizeof buf,
                    "<text class=\"label\" x=\"%s\" y=\"%s\" font-family=\"sans-serif\" "
                    "font-size=\"16\" fill=\"#111111\" stroke=\"none\">%s</text>\n",
                    num(m.mx(p.x) + 6.0).c_str(), num(m.my(p.y) - 6.0).c_str(),
                    kConfigurationLabels[i]);
      out += buf;
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace morley
