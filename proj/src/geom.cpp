#include "morley/geom.hpp"

#include <algorithm>
#include <cmath>

namespace morley {

namespace {

double coord_scale(std::initializer_list<Point> pts) {
  double m = 1.0;
  for (const Point& p : pts) m = std::max({m, std::fabs(p.x), std::fabs(p.y)});
  return m;
}

double length_floor(const ToleranceProfile& tol, std::initializer_list<Point> pts) {
  return tol.length_tol_rel * coord_scale(pts);
}

}  // namespace

double fold_angle(double a) {
  double m = std::fmod(std::fabs(a), 2.0 * kPi);
  return m > kPi ? 2.0 * kPi - m : m;
}

const char* to_string(GeomErrc c) {
  switch (c) {
    case GeomErrc::coincident_points: return "CoincidentPoints";
    case GeomErrc::parallel_lines: return "ParallelLines";
    case GeomErrc::degenerate_angle: return "DegenerateAngle";
    case GeomErrc::collinear_points: return "CollinearPoints";
    case GeomErrc::degenerate_triangle: return "DegenerateTriangle";
    case GeomErrc::proportional_triples: return "ProportionalTriples";
    case GeomErrc::point_at_infinity: return "PointAtInfinity";
    case GeomErrc::non_equilateral_frame: return "NonEquilateralFrame";
    case GeomErrc::invalid_parameters: return "InvalidParameters";
    case GeomErrc::wrong_side: return "WrongSide";
    case GeomErrc::inconsistent_configuration: return "InconsistentConfiguration";
    case GeomErrc::circumcenter_outside: return "CircumcenterOutside";
    case GeomErrc::invalid_request: return "InvalidRequest";
    case GeomErrc::invalid_configuration: return "InvalidConfiguration";
  }
  return "GeomError";
}

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Vec2 normalized(Vec2 v) {
  double n = norm(v);
  if (n == 0.0) throw GeomError(GeomErrc::coincident_points, "cannot normalize zero vector");
  return {v.x / n, v.y / n};
}

double distance(Point a, Point b) { return norm(a - b); }

Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

const ToleranceProfile& default_tol() {
  static const ToleranceProfile t{};
  return t;
}

Line Line::canonical(double a, double b, double c) {
  double n = std::hypot(a, b);
  if (n == 0.0) throw GeomError(GeomErrc::invalid_parameters, "line with zero normal");
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  // scrub negative zeros so equal lines are bitwise equal
  return Line{a + 0.0, b + 0.0, c + 0.0};
}

Line Ray::to_line() const {
  Vec2 n = perp(dir);
  return Line::canonical(n.x, n.y, -(n.x * origin.x + n.y * origin.y));
}

double signed_area(Point a, Point b, Point c) {
  return 0.5 * cross(b - a, c - a);
}

Triangle::Triangle(Point v1, Point v2, Point v3, double min_angle_floor)
    : v1_(v1), v2_(v2), v3_(v3) {
  if (signed_area(v1_, v2_, v3_) < 0.0) std::swap(v2_, v3_);
  double s12 = distance(v1_, v2_);
  double s23 = distance(v2_, v3_);
  double s31 = distance(v3_, v1_);
  double smax = std::max({s12, s23, s31});
  double smin = std::min({s12, s23, s31});
  diameter_ = smax;
  if (!(smin > 0.0) || !std::isfinite(smax))
    throw GeomError(GeomErrc::degenerate_triangle, "triangle has a zero or non-finite side");
  if (smax / smin > 1e8)
    throw GeomError(GeomErrc::degenerate_triangle, "triangle side ratio above 1e8");
  double a1 = angle_at(v1_, v2_, v3_);
  double a2 = angle_at(v2_, v3_, v1_);
  double a3 = angle_at(v3_, v1_, v2_);
  min_angle_ = std::min({a1, a2, a3});
  if (min_angle_ <= min_angle_floor)
    throw GeomError(GeomErrc::degenerate_triangle, "triangle interior angle below floor");
}

Line line_through(Point p, Point q, const ToleranceProfile& tol) {
  if (distance(p, q) <= length_floor(tol, {p, q}))
    throw GeomError(GeomErrc::coincident_points, "line_through: points coincide");
  Vec2 n = perp(q - p);
  // anchor c at the midpoint so line_through(p,q) == line_through(q,p) bitwise
  Point m = midpoint(p, q);
  return Line::canonical(n.x, n.y, -(n.x * m.x + n.y * m.y));
}

Point intersect(const Line& l1, const Line& l2, const ToleranceProfile& tol) {
  // normals are unit vectors, so this determinant is already normalized
  double det = l1.a * l2.b - l2.a * l1.b;
  if (std::fabs(det) <= tol.det_tol)
    throw GeomError(GeomErrc::parallel_lines, "intersect: lines parallel");
  return {(l1.b * l2.c - l2.b * l1.c) / det, (l2.a * l1.c - l1.a * l2.c) / det};
}

Point intersect(const Ray& r1, const Ray& r2, const ToleranceProfile& tol) {
  double det = cross(r1.dir, r2.dir);
  if (std::fabs(det) <= tol.det_tol)
    throw GeomError(GeomErrc::parallel_lines, "intersect: rays parallel");
  Vec2 d = r2.origin - r1.origin;
  double t = cross(d, r2.dir) / det;
  double u = cross(d, r1.dir) / det;
  double floor = -tol.length_tol_rel * coord_scale({r1.origin, r2.origin});
  if (t < floor || u < floor)
    throw GeomError(GeomErrc::inconsistent_configuration, "intersect: rays meet behind an origin");
  return r1.at(t);
}

double angle_at(Point vertex, Point p, Point q, const ToleranceProfile& tol) {
  Vec2 u = p - vertex;
  Vec2 w = q - vertex;
  double floor = length_floor(tol, {vertex, p, q});
  if (norm(u) <= floor || norm(w) <= floor)
    throw GeomError(GeomErrc::coincident_points, "angle_at: arm collapses onto vertex");
  return std::atan2(std::fabs(cross(u, w)), dot(u, w));
}

namespace {

// Directions of rays splitting the wedge at vertex into `parts` equal parts,
// sweeping from toward1 to toward2.
Vec2 wedge_direction(Point vertex, Point toward1, Point toward2, double fraction,
                     const ToleranceProfile& tol) {
  double total = angle_at(vertex, toward1, toward2, tol);
  Vec2 u = toward1 - vertex;
  double base = std::atan2(u.y, u.x);
  double sweep = cross(u, toward2 - vertex) >= 0.0 ? 1.0 : -1.0;
  double theta = base + sweep * fraction * total;
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::pair<Ray, Ray> trisect_angle(Point vertex, Point toward1, Point toward2,
                                  const ToleranceProfile& tol) {
  double total = angle_at(vertex, toward1, toward2, tol);
  if (total <= tol.angle_tol || total >= kPi - tol.angle_tol)
    throw GeomError(GeomErrc::degenerate_angle, "trisect_angle: wedge is empty or straight");
  Ray first{vertex, wedge_direction(vertex, toward1, toward2, 1.0 / 3.0, tol)};
  Ray second{vertex, wedge_direction(vertex, toward1, toward2, 2.0 / 3.0, tol)};
  return {first, second};
}

Ray bisect_angle(Point vertex, Point toward1, Point toward2,
                 const ToleranceProfile& tol) {
  double total = angle_at(vertex, toward1, toward2, tol);
  if (total >= kPi - tol.angle_tol)
    throw GeomError(GeomErrc::degenerate_angle, "bisect_angle: straight wedge is ambiguous");
  if (total <= tol.angle_tol) return Ray{vertex, normalized(toward1 - vertex)};
  return Ray{vertex, wedge_direction(vertex, toward1, toward2, 0.5, tol)};
}

Line perpendicular_bisector(Point p, Point q, const ToleranceProfile& tol) {
  if (distance(p, q) <= length_floor(tol, {p, q}))
    throw GeomError(GeomErrc::coincident_points, "perpendicular_bisector: points coincide");
  Vec2 n = q - p;
  Point m = midpoint(p, q);
  return Line::canonical(n.x, n.y, -(n.x * m.x + n.y * m.y));
}

Point circumcenter(Point a, Point b, Point c, const ToleranceProfile& tol) {
  Vec2 ab = b - a;
  Vec2 ac = c - a;
  double d = 2.0 * cross(ab, ac);
  double diam = std::max({norm(ab), norm(ac), distance(b, c)});
  if (std::fabs(d) <= 2.0 * tol.det_tol * diam * diam)
    throw GeomError(GeomErrc::collinear_points, "circumcenter: points collinear");
  double ab2 = dot(ab, ab);
  double ac2 = dot(ac, ac);
  return {a.x + (ac.y * ab2 - ab.y * ac2) / d, a.y + (ab.x * ac2 - ac.x * ab2) / d};
}

double equilateral_residual(const Triangle& t) {
  double s12 = distance(t.v1(), t.v2());
  double s23 = distance(t.v2(), t.v3());
  double s31 = distance(t.v3(), t.v1());
  auto rel = [](double u, double v) { return std::fabs(u - v) / std::max(u, v); };
  return std::max({rel(s12, s23), rel(s23, s31), rel(s31, s12)});
}

bool point_in_triangle(Point p, const Triangle& t, const ToleranceProfile& tol) {
  double total = signed_area(t.v1(), t.v2(), t.v3());
  double l1 = signed_area(p, t.v2(), t.v3()) / total;
  double l2 = signed_area(t.v1(), p, t.v3()) / total;
  double l3 = signed_area(t.v1(), t.v2(), p) / total;
  return l1 > tol.det_tol && l2 > tol.det_tol && l3 > tol.det_tol;
}

Triangle triangle_from_angles(double alpha, double beta, double gamma) {
  if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0) ||
      std::fabs(alpha + beta + gamma - kPi) > 1e-9)
    throw GeomError(GeomErrc::invalid_parameters,
                    "triangle_from_angles: angles must be positive and sum to pi");
  Point b{0.0, 0.0};
  Point c{std::sin(alpha), 0.0};
  Point a{std::sin(gamma) * std::cos(beta), std::sin(gamma) * std::sin(beta)};
  return Triangle(a, b, c);
}

Similarity Similarity::from_two_points(Point p1, Point p2, Point q1, Point q2,
                                       const ToleranceProfile& tol) {
  Vec2 dp = p2 - p1;
  Vec2 dq = q2 - q1;
  double n2 = dot(dp, dp);
  if (std::sqrt(n2) <= length_floor(tol, {p1, p2}))
    throw GeomError(GeomErrc::coincident_points, "similarity: source points coincide");
  // (a + i b) = (q2 - q1) / (p2 - p1) as complex numbers
  double a = (dq.x * dp.x + dq.y * dp.y) / n2;
  double b = (dq.y * dp.x - dq.x * dp.y) / n2;
  Similarity s{a, b, 0.0, 0.0};
  Point image = s.apply(p1);
  s.tx = q1.x - image.x;
  s.ty = q1.y - image.y;
  return s;
}

}  // namespace morley
