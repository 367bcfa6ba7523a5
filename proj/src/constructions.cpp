#include "morley/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace morley {

namespace {

// Apex of the isosceles triangle with base (u, v), apex angle `apex`, placed
// on the opposite side of the base from `away`.
Point isosceles_apex(Point u, Point v, Point away, double apex) {
  Point m = midpoint(u, v);
  double half_base = distance(u, v) / 2.0;
  Vec2 n = normalized(perp(v - u));
  if (dot(away - m, n) > 0.0) n = -1.0 * n;
  return m + (half_base / std::tan(apex / 2.0)) * n;
}

bool same_side(Point s1, Point s2, Point p, Point q) {
  return signed_area(s1, s2, p) * signed_area(s1, s2, q) > 0.0;
}

double identity_residual(double measured, double formula) {
  return std::fabs(measured - fold_angle(formula));
}

}  // namespace

double HypothesisResiduals::max_residual() const {
  return std::max({angle_identity[0], angle_identity[1], angle_identity[2],
                   bisector[0], bisector[1], bisector[2]});
}

bool HypothesisResiduals::all_interior() const {
  for (bool b : interiority)
    if (!b) return false;
  return true;
}

MorleyConfiguration classic_morley(const Triangle& t, const ToleranceProfile& tol) {
  Point A = t.v1(), B = t.v2(), C = t.v3();
  // adjacent trisectors: from each endpoint of a side, the trisector nearest
  // that side; trisect_angle returns the near ray first
  Ray bx = trisect_angle(B, C, A, tol).first;
  Ray cx = trisect_angle(C, B, A, tol).first;
  Ray cy = trisect_angle(C, A, B, tol).first;
  Ray ay = trisect_angle(A, C, B, tol).first;
  Ray az = trisect_angle(A, B, C, tol).first;
  Ray bz = trisect_angle(B, A, C, tol).first;
  Point X = intersect(bx, cx, tol);
  Point Y = intersect(cy, ay, tol);
  Point Z = intersect(az, bz, tol);
  return MorleyConfiguration::from_cevian_vertices(A, B, C, X, Y, Z, tol);
}

HypothesisResiduals hypothesis_residuals(const MorleyConfiguration& cfg,
                                         const ToleranceProfile& tol) {
  HypothesisResiduals r;
  const Point A = cfg.A(), B = cfg.B(), C = cfg.C(), X = cfg.X(), Y = cfg.Y(),
              Z = cfg.Z(), D = cfg.D(), E = cfg.E(), F = cfg.F();
  const double third = deg2rad(120.0);
  r.angle_identity[0] = identity_residual(angle_at(X, B, C, tol), third + angle_at(A, Y, Z, tol));
  r.angle_identity[1] = identity_residual(angle_at(Y, C, A, tol), third + angle_at(B, Z, X, tol));
  r.angle_identity[2] = identity_residual(angle_at(Z, A, B, tol), third + angle_at(C, X, Y, tol));
  struct BisectorCase {
    Point apex, arm1, arm2, through;
  };
  const BisectorCase cases[] = {{D, B, C, X}, {E, C, A, Y}, {F, A, B, Z}};
  for (int i = 0; i < 3; ++i) {
    Ray bis = bisect_angle(cases[i].apex, cases[i].arm1, cases[i].arm2, tol);
    Vec2 to_pt = normalized(cases[i].through - cases[i].apex);
    r.bisector[i] = std::atan2(std::fabs(cross(bis.dir, to_pt)), dot(bis.dir, to_pt));
  }
  Triangle abc = cfg.abc();
  const Point probes[] = {X, Y, Z, D, E, F};
  for (int i = 0; i < 6; ++i) r.interiority[i] = point_in_triangle(probes[i], abc, tol);
  return r;
}

bool converse_validity(const ConverseParameters& params, const ToleranceProfile& tol) {
  const double d = params.d, e = params.e, f = params.f;
  if (!(params.s > 0.0) || !std::isfinite(params.s)) return false;
  if (!(d > 0.0 && d < kPi && e > 0.0 && e < kPi && f > 0.0 && f < kPi)) return false;
  const double third = deg2rad(120.0);
  double x = third - (e + f) / 2.0;
  double y = third - (f + d) / 2.0;
  double z = third - (d + e) / 2.0;
  if (!(x > 0.0 && y > 0.0 && z > 0.0)) return false;
  if (!(kPi - y - z > 0.0 && kPi - z - x > 0.0 && kPi - x - y > 0.0)) return false;
  try {
    converse_construct(params, tol);
  } catch (const GeomError&) {
    return false;
  }
  return true;
}

MorleyConfiguration converse_construct(const ConverseParameters& params,
                                       const ToleranceProfile& tol) {
  const double d = params.d, e = params.e, f = params.f, s = params.s;
  if (!(s > 0.0) || !std::isfinite(s) ||
      !(d > 0.0 && d < kPi && e > 0.0 && e < kPi && f > 0.0 && f < kPi))
    throw GeomError(GeomErrc::invalid_parameters,
                    "converse_construct: apex angles must lie in (0, pi) and s > 0");
  const double third = deg2rad(120.0);
  double x = third - (e + f) / 2.0;
  double y = third - (f + d) / 2.0;
  double z = third - (d + e) / 2.0;
  if (!(x > 0.0 && y > 0.0 && z > 0.0) ||
      !(kPi - y - z > 0.0 && kPi - z - x > 0.0 && kPi - x - y > 0.0))
    throw GeomError(GeomErrc::invalid_parameters,
                    "converse_construct: derived angles leave the admissible region");

  const Point X{0.0, 0.0};
  const Point Y{s, 0.0};
  const Point Z{s / 2.0, s * std::sqrt(3.0) / 2.0};
  Point D = isosceles_apex(Y, Z, X, d);
  Point E = isosceles_apex(Z, X, Y, e);
  Point F = isosceles_apex(X, Y, Z, f);
  Point A = intersect(line_through(E, Z, tol), line_through(F, Y, tol), tol);
  Point B = intersect(line_through(F, X, tol), line_through(D, Z, tol), tol);
  Point C = intersect(line_through(D, Y, tol), line_through(E, X, tol), tol);
  if (!same_side(Y, Z, A, D) || !same_side(Z, X, B, E) || !same_side(X, Y, C, F))
    throw GeomError(GeomErrc::wrong_side,
                    "converse_construct: intersections land on the wrong side of XYZ");
  return MorleyConfiguration::from_cevian_vertices(A, B, C, X, Y, Z, tol);
}

InclinationAngles inclination_angles(const MorleyConfiguration& cfg,
                                     const ToleranceProfile& tol) {
  const Point A = cfg.A(), B = cfg.B(), C = cfg.C(), X = cfg.X(), Y = cfg.Y(), Z = cfg.Z();
  double x1 = angle_at(Y, X, C, tol), x2 = angle_at(Z, B, X, tol);
  double y1 = angle_at(Z, Y, A, tol), y2 = angle_at(X, C, Y, tol);
  double z1 = angle_at(X, Z, B, tol), z2 = angle_at(Y, A, Z, tol);
  InclinationAngles r;
  r.max_spread = std::max({std::fabs(x1 - x2), std::fabs(y1 - y2), std::fabs(z1 - z2)});
  if (r.max_spread > 10.0 * tol.angle_tol)
    throw GeomError(GeomErrc::inconsistent_configuration,
                    "inclination_angles: paired measurements disagree");
  r.x = (x1 + x2) / 2.0;
  r.y = (y1 + y2) / 2.0;
  r.z = (z1 + z2) / 2.0;
  return r;
}

std::array<bool, 3> circumcenters_interior(const MorleyConfiguration& cfg,
                                           const ToleranceProfile& tol) {
  return {point_in_triangle(cfg.P(), Triangle(cfg.A(), cfg.Y(), cfg.Z()), tol),
          point_in_triangle(cfg.Q(), Triangle(cfg.B(), cfg.Z(), cfg.X()), tol),
          point_in_triangle(cfg.R(), Triangle(cfg.C(), cfg.X(), cfg.Y()), tol)};
}

std::array<double, 6> six_angles(const MorleyConfiguration& cfg, const ToleranceProfile& tol,
                                 bool require_interior) {
  if (require_interior) {
    std::array<bool, 3> in = circumcenters_interior(cfg, tol);
    if (!(in[0] && in[1] && in[2]))
      throw GeomError(GeomErrc::circumcenter_outside,
                      "six_angles: a circumcenter lies outside its triangle");
  }
  return {angle_at(cfg.X(), cfg.B(), cfg.R(), tol), angle_at(cfg.X(), cfg.C(), cfg.Q(), tol),
          angle_at(cfg.Y(), cfg.C(), cfg.P(), tol), angle_at(cfg.Y(), cfg.A(), cfg.R(), tol),
          angle_at(cfg.Z(), cfg.A(), cfg.Q(), tol), angle_at(cfg.Z(), cfg.B(), cfg.P(), tol)};
}

std::array<double, 6> circumcenter_half_angle_check(const MorleyConfiguration& cfg,
                                                    const ToleranceProfile& tol) {
  InclinationAngles incl = inclination_angles(cfg, tol);
  const double right = kPi / 2.0;
  return {identity_residual(angle_at(cfg.X(), cfg.C(), cfg.R(), tol), right - incl.x),
          identity_residual(angle_at(cfg.X(), cfg.B(), cfg.Q(), tol), right - incl.x),
          identity_residual(angle_at(cfg.Y(), cfg.A(), cfg.P(), tol), right - incl.y),
          identity_residual(angle_at(cfg.Y(), cfg.C(), cfg.R(), tol), right - incl.y),
          identity_residual(angle_at(cfg.Z(), cfg.A(), cfg.P(), tol), right - incl.z),
          identity_residual(angle_at(cfg.Z(), cfg.B(), cfg.Q(), tol), right - incl.z)};
}

ConverseParameters measure_apex_angles(const MorleyConfiguration& cfg,
                                       const ToleranceProfile& tol) {
  ConverseParameters p;
  p.d = angle_at(cfg.D(), cfg.Y(), cfg.Z(), tol);
  p.e = angle_at(cfg.E(), cfg.Z(), cfg.X(), tol);
  p.f = angle_at(cfg.F(), cfg.X(), cfg.Y(), tol);
  p.s = (distance(cfg.X(), cfg.Y()) + distance(cfg.Y(), cfg.Z()) +
         distance(cfg.Z(), cfg.X())) / 3.0;
  return p;
}

}  // namespace morley
