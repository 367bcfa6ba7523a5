#include "morley/configuration.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace morley {

namespace {

void check_invariants(const std::array<Point, 12>& p, const ToleranceProfile& tol) {
  const Point &A = p[0], &B = p[1], &C = p[2], &X = p[3], &Y = p[4], &Z = p[5],
              &D = p[6], &E = p[7], &F = p[8], &P = p[9], &Q = p[10], &R = p[11];
  if (signed_area(A, B, C) <= 0.0 || signed_area(X, Y, Z) <= 0.0)
    throw GeomError(GeomErrc::invalid_configuration,
                    "configuration: ABC and XYZ must both be counterclockwise");
  double diam = std::max({distance(A, B), distance(B, C), distance(C, A)});

  // D = BZ ^ CY checked as incidence with both carrier lines; re-intersecting
  // is ill-conditioned when the lines are near parallel and D is far out
  struct OnLines {
    Point pt, l1a, l1b, l2a, l2b;
    const char* what;
  };
  const OnLines meets[] = {
      {D, B, Z, C, Y, "D = BZ ^ CY"},
      {E, C, X, A, Z, "E = CX ^ AZ"},
      {F, A, Y, B, X, "F = AY ^ BX"},
  };
  for (const OnLines& m : meets) {
    double scale = diam + distance(m.pt, m.l1a);
    if (std::fabs(line_through(m.l1a, m.l1b, tol).eval(m.pt)) > tol.length_tol_rel * scale ||
        std::fabs(line_through(m.l2a, m.l2b, tol).eval(m.pt)) > tol.length_tol_rel * scale)
      throw GeomError(GeomErrc::invalid_configuration,
                      std::string("configuration invariant violated: ") + m.what);
  }

  struct Equidistant {
    Point center, a, b, c;
    const char* what;
  };
  const Equidistant centers[] = {
      {P, A, Y, Z, "P = circumcenter(AYZ)"},
      {Q, B, Z, X, "Q = circumcenter(BZX)"},
      {R, C, X, Y, "R = circumcenter(CXY)"},
  };
  for (const Equidistant& e : centers) {
    double ra = distance(e.center, e.a);
    double rb = distance(e.center, e.b);
    double rc = distance(e.center, e.c);
    double tol_r = tol.length_tol_rel * (diam + ra);
    if (std::fabs(ra - rb) > tol_r || std::fabs(rb - rc) > tol_r)
      throw GeomError(GeomErrc::invalid_configuration,
                      std::string("configuration invariant violated: ") + e.what);
  }
}

}  // namespace

MorleyConfiguration::MorleyConfiguration(const std::array<Point, 12>& pts) : pts_(pts) {
  diameter_ = std::max({distance(pts_[0], pts_[1]), distance(pts_[1], pts_[2]),
                        distance(pts_[2], pts_[0])});
}

MorleyConfiguration MorleyConfiguration::from_cevian_vertices(Point A, Point B, Point C,
                                                              Point X, Point Y, Point Z,
                                                              const ToleranceProfile& tol) {
  if (signed_area(A, B, C) <= 0.0 || signed_area(X, Y, Z) <= 0.0)
    throw GeomError(GeomErrc::invalid_configuration,
                    "configuration: ABC and XYZ must both be counterclockwise");
  std::array<Point, 12> p{};
  p[0] = A; p[1] = B; p[2] = C; p[3] = X; p[4] = Y; p[5] = Z;
  p[6] = intersect(line_through(B, Z, tol), line_through(C, Y, tol), tol);
  p[7] = intersect(line_through(C, X, tol), line_through(A, Z, tol), tol);
  p[8] = intersect(line_through(A, Y, tol), line_through(B, X, tol), tol);
  p[9] = circumcenter(A, Y, Z, tol);
  p[10] = circumcenter(B, Z, X, tol);
  p[11] = circumcenter(C, X, Y, tol);
  return MorleyConfiguration(p);
}

MorleyConfiguration MorleyConfiguration::from_points(const std::array<Point, 12>& pts,
                                                     const ToleranceProfile& tol) {
  check_invariants(pts, tol);
  return MorleyConfiguration(pts);
}

MorleyConfiguration MorleyConfiguration::transformed(const Similarity& s,
                                                     const ToleranceProfile& tol) const {
  std::array<Point, 12> p{};
  for (size_t i = 0; i < 12; ++i) p[i] = s.apply(pts_[i]);
  return from_points(p, tol);
}

std::string to_record(const MorleyConfiguration& cfg) {
  std::string out;
  char buf[96];
  for (size_t i = 0; i < 12; ++i) {
    std::snprintf(buf, sizeof buf, "%s %a %a\n", kConfigurationLabels[i],
                  cfg.points()[i].x, cfg.points()[i].y);
    out += buf;
  }
  return out;
}

void write_record(std::ostream& os, const MorleyConfiguration& cfg) {
  os << to_record(cfg);
}

MorleyConfiguration parse_record(std::string_view text, const ToleranceProfile& tol) {
  std::map<std::string, Point> seen;
  std::istringstream is{std::string(text)};
  std::string label, xs, ys;
  while (is >> label >> xs >> ys) {
    char* endx = nullptr;
    char* endy = nullptr;
    Point p{std::strtod(xs.c_str(), &endx), std::strtod(ys.c_str(), &endy)};
    if (*endx != '\0' || *endy != '\0' || !std::isfinite(p.x) || !std::isfinite(p.y))
      throw GeomError(GeomErrc::invalid_configuration, "record: bad coordinate in line " + label);
    if (!seen.emplace(label, p).second)
      throw GeomError(GeomErrc::invalid_configuration, "record: duplicate label " + label);
  }
  std::array<Point, 12> pts{};
  for (size_t i = 0; i < 12; ++i) {
    auto it = seen.find(kConfigurationLabels[i]);
    if (it == seen.end())
      throw GeomError(GeomErrc::invalid_configuration,
                      std::string("record: missing label ") + kConfigurationLabels[i]);
    pts[i] = it->second;
  }
  if (seen.size() != 12)
    throw GeomError(GeomErrc::invalid_configuration, "record: unexpected extra labels");
  return MorleyConfiguration::from_points(pts, tol);
}

MorleyConfiguration read_record(std::istream& is, const ToleranceProfile& tol) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_record(buf.str(), tol);
}

}  // namespace morley
