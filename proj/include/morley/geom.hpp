// 2D Cartesian kernel: points, lines, rays, triangles, angle measurement,
// trisection/bisection, circumcenters and tolerance-aware predicates.
// Everything here is a pure function of its inputs; values are immutable
// after construction and safe to share between threads.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace morley {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

// Folds an arbitrary angle expression (negative, reflex, >360deg) onto the
// unsigned measurement range [0, pi]. Used to compare formula values such as
// 390deg - x - y - z against angles measured with angle_at().
double fold_angle(double a);

enum class GeomErrc {
  coincident_points,
  parallel_lines,
  degenerate_angle,
  collinear_points,
  degenerate_triangle,
  proportional_triples,
  point_at_infinity,
  non_equilateral_frame,
  invalid_parameters,
  wrong_side,
  inconsistent_configuration,
  circumcenter_outside,
  invalid_request,
  invalid_configuration,
};

const char* to_string(GeomErrc c);

class GeomError : public std::runtime_error {
public:
  GeomError(GeomErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  GeomErrc code() const { return code_; }

private:
  GeomErrc code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 v);
Vec2 normalized(Vec2 v);
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
double distance(Point a, Point b);
Point midpoint(Point a, Point b);

struct ToleranceProfile {
  double angle_tol = 1e-9;       // radians
  double length_tol_rel = 1e-9;  // relative to the figure's diameter
  double det_tol = 1e-9;         // normalized determinants
};

const ToleranceProfile& default_tol();

// Oriented line a*x + b*y + c = 0 in canonical form: a^2 + b^2 = 1 and the
// first nonzero of (a, b) positive, negative zeros scrubbed. Two lines through
// the same two points compare bitwise equal regardless of construction order.
struct Line {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  static Line canonical(double a, double b, double c);
  double eval(Point p) const { return a * p.x + b * p.y + c; }
};

// Ray keeps the orientation a Line drops; side-of tests and ray-ray
// intersections use it.
struct Ray {
  Point origin;
  Vec2 dir;  // unit

  Point at(double t) const { return origin + t * dir; }
  Line to_line() const;
};

// Counterclockwise triangle. The constructor reorients clockwise input and
// rejects degenerate shapes: any interior angle below min_angle_floor or a
// longest/shortest side ratio above 1e8.
class Triangle {
public:
  Triangle(Point v1, Point v2, Point v3, double min_angle_floor = 1e-6);

  Point v1() const { return v1_; }
  Point v2() const { return v2_; }
  Point v3() const { return v3_; }
  double diameter() const { return diameter_; }
  double min_angle() const { return min_angle_; }

private:
  Point v1_, v2_, v3_;
  double diameter_ = 0.0;
  double min_angle_ = 0.0;
};

double signed_area(Point a, Point b, Point c);

Line line_through(Point p, Point q, const ToleranceProfile& tol = default_tol());

Point intersect(const Line& l1, const Line& l2,
                const ToleranceProfile& tol = default_tol());

// Intersection of the carrier lines that must also lie forward on both rays.
Point intersect(const Ray& r1, const Ray& r2,
                const ToleranceProfile& tol = default_tol());

// Unsigned angle p-vertex-q in [0, pi]; symmetric in (p, q).
double angle_at(Point vertex, Point p, Point q,
                const ToleranceProfile& tol = default_tol());

// Two rays splitting the wedge at vertex into three equal parts. The first
// ray is the one adjacent to ray(vertex -> toward1).
std::pair<Ray, Ray> trisect_angle(Point vertex, Point toward1, Point toward2,
                                  const ToleranceProfile& tol = default_tol());

// Single ray halving the wedge. A zero-width wedge returns the shared
// direction; a straight wedge (pi) is rejected as ambiguous.
Ray bisect_angle(Point vertex, Point toward1, Point toward2,
                 const ToleranceProfile& tol = default_tol());

Line perpendicular_bisector(Point p, Point q,
                            const ToleranceProfile& tol = default_tol());

Point circumcenter(Point a, Point b, Point c,
                   const ToleranceProfile& tol = default_tol());

// Max pairwise relative side-length deviation; zero iff equilateral.
double equilateral_residual(const Triangle& t);

// Strict interior test: all normalized barycentric signs above det_tol.
// Vertices, edges and exterior points all return false.
bool point_in_triangle(Point p, const Triangle& t,
                       const ToleranceProfile& tol = default_tol());

// Canonical triangle with the given interior angles: vertex B at the origin,
// C on the positive x axis, A above, circumdiameter 1. Vertex order (A, B, C)
// maps to (v1, v2, v3).
Triangle triangle_from_angles(double alpha, double beta, double gamma);

// Direct similarity z -> (scale * e^{i rot}) z + t, no reflection.
struct Similarity {
  double a = 1.0;  // cos(rot) * scale
  double b = 0.0;  // sin(rot) * scale
  double tx = 0.0;
  double ty = 0.0;

  Point apply(Point p) const {
    return {a * p.x - b * p.y + tx, b * p.x + a * p.y + ty};
  }

  // The unique direct similarity with p1 -> q1 and p2 -> q2.
  static Similarity from_two_points(Point p1, Point p2, Point q1, Point q2,
                                    const ToleranceProfile& tol = default_tol());
};

}  // namespace morley
