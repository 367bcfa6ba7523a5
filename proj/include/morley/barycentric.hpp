// Homogeneous barycentric algebra over a reference triangle: points and lines
// share one triple representation, joins and meets are cross products, and
// concurrency is a 3x3 determinant.

#pragma once

#include <array>

#include "morley/geom.hpp"

namespace morley {

enum class TripleRole { point, line };

// Coordinates up to nonzero scale. Canonical form divides by the first entry
// of largest magnitude, so canonical triples have max |entry| = 1.
struct HomogeneousTriple {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  TripleRole role = TripleRole::point;

  std::array<double, 3> coords() const { return {u, v, w}; }
};

HomogeneousTriple canonical(const HomogeneousTriple& t);
HomogeneousTriple bary_point(double u, double v, double w);
HomogeneousTriple bary_line_coeffs(double u, double v, double w);

inline double dot(const HomogeneousTriple& a, const HomogeneousTriple& b) {
  return a.u * b.u + a.v * b.v + a.w * b.w;
}

// Line joining two points (cross product, canonicalized).
HomogeneousTriple bary_line(const HomogeneousTriple& p, const HomogeneousTriple& q,
                            const ToleranceProfile& tol = default_tol());

// Point of intersection of two lines (cross product, canonicalized).
HomogeneousTriple bary_intersect(const HomogeneousTriple& l1, const HomogeneousTriple& l2,
                                 const ToleranceProfile& tol = default_tol());

// True iff the determinant of the three canonical line triples vanishes.
// Concurrency at a point at infinity counts as concurrency.
bool concurrent(const HomogeneousTriple& l1, const HomogeneousTriple& l2,
                const HomogeneousTriple& l3, const ToleranceProfile& tol = default_tol());

// Common point of the cevians A-X, B-Y, C-Z generated by the apex triples
// D = (-p:1:1), E = (1:-q:1), F = (1:1:-r). Verifies incidence with all
// three cevians before returning (p:q:r).
HomogeneousTriple perspector(double p, double q, double r,
                             const ToleranceProfile& tol = default_tol());

// Cartesian reference triangle carrying the barycentric frame; vertices
// (v1, v2, v3) play the roles (X, Y, Z).
struct ReferenceFrame {
  Triangle t;
};

Point bary_to_cartesian(const ReferenceFrame& frame, const HomogeneousTriple& p,
                        const ToleranceProfile& tol = default_tol());

HomogeneousTriple cartesian_to_bary(const ReferenceFrame& frame, Point p);

enum class FrameSide { YZ, ZX, XY };

// Distance of p from the perpendicular bisector of the named frame side.
// Only defined over an equilateral frame; points shaped (-t:1:1) relative to
// side YZ sit at distance zero.
double on_perpendicular_bisector_form(const ReferenceFrame& frame, Point p, FrameSide side,
                                      const ToleranceProfile& tol = default_tol());

}  // namespace morley
