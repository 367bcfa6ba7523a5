#include "morley/barycentric.hpp"

#include <cmath>

namespace morley {

namespace {

HomogeneousTriple cross_triple(const HomogeneousTriple& a, const HomogeneousTriple& b,
                               TripleRole role, const ToleranceProfile& tol) {
  HomogeneousTriple ca = canonical(a);
  HomogeneousTriple cb = canonical(b);
  HomogeneousTriple r;
  r.u = ca.v * cb.w - ca.w * cb.v;
  r.v = ca.w * cb.u - ca.u * cb.w;
  r.w = ca.u * cb.v - ca.v * cb.u;
  r.role = role;
  double m = std::max({std::fabs(r.u), std::fabs(r.v), std::fabs(r.w)});
  if (m <= tol.det_tol)
    throw GeomError(GeomErrc::proportional_triples, "cross of proportional triples");
  return canonical(r);
}

void require_role(const HomogeneousTriple& t, TripleRole role, const char* what) {
  if (t.role != role) throw GeomError(GeomErrc::invalid_parameters, what);
}

}  // namespace

HomogeneousTriple canonical(const HomogeneousTriple& t) {
  double au = std::fabs(t.u), av = std::fabs(t.v), aw = std::fabs(t.w);
  double m = std::max({au, av, aw});
  if (m == 0.0 || !std::isfinite(m))
    throw GeomError(GeomErrc::invalid_parameters, "triple is zero or non-finite");
  double pivot = (au == m) ? t.u : (av == m) ? t.v : t.w;
  return HomogeneousTriple{t.u / pivot + 0.0, t.v / pivot + 0.0, t.w / pivot + 0.0, t.role};
}

HomogeneousTriple bary_point(double u, double v, double w) {
  return canonical(HomogeneousTriple{u, v, w, TripleRole::point});
}

HomogeneousTriple bary_line_coeffs(double u, double v, double w) {
  return canonical(HomogeneousTriple{u, v, w, TripleRole::line});
}

HomogeneousTriple bary_line(const HomogeneousTriple& p, const HomogeneousTriple& q,
                            const ToleranceProfile& tol) {
  require_role(p, TripleRole::point, "bary_line expects point triples");
  require_role(q, TripleRole::point, "bary_line expects point triples");
  return cross_triple(p, q, TripleRole::line, tol);
}

HomogeneousTriple bary_intersect(const HomogeneousTriple& l1, const HomogeneousTriple& l2,
                                 const ToleranceProfile& tol) {
  require_role(l1, TripleRole::line, "bary_intersect expects line triples");
  require_role(l2, TripleRole::line, "bary_intersect expects line triples");
  return cross_triple(l1, l2, TripleRole::point, tol);
}

bool concurrent(const HomogeneousTriple& l1, const HomogeneousTriple& l2,
                const HomogeneousTriple& l3, const ToleranceProfile& tol) {
  HomogeneousTriple a = canonical(l1), b = canonical(l2), c = canonical(l3);
  double det = a.u * (b.v * c.w - b.w * c.v) - a.v * (b.u * c.w - b.w * c.u) +
               a.w * (b.u * c.v - b.v * c.u);
  return std::fabs(det) < tol.det_tol;
}

HomogeneousTriple perspector(double p, double q, double r, const ToleranceProfile& tol) {
  if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r))
    throw GeomError(GeomErrc::invalid_parameters, "perspector parameters must be finite");
  HomogeneousTriple X = bary_point(1, 0, 0);
  HomogeneousTriple Y = bary_point(0, 1, 0);
  HomogeneousTriple Z = bary_point(0, 0, 1);
  HomogeneousTriple D = bary_point(-p, 1, 1);
  HomogeneousTriple E = bary_point(1, -q, 1);
  HomogeneousTriple F = bary_point(1, 1, -r);
  HomogeneousTriple A = bary_intersect(bary_line(E, Z, tol), bary_line(F, Y, tol), tol);
  HomogeneousTriple B = bary_intersect(bary_line(F, X, tol), bary_line(D, Z, tol), tol);
  HomogeneousTriple C = bary_intersect(bary_line(D, Y, tol), bary_line(E, X, tol), tol);
  HomogeneousTriple P = bary_point(p, q, r);
  for (const HomogeneousTriple& cev : {bary_line(A, X, tol), bary_line(B, Y, tol),
                                       bary_line(C, Z, tol)}) {
    if (std::fabs(dot(cev, P)) >= tol.det_tol)
      throw GeomError(GeomErrc::inconsistent_configuration,
                      "perspector: cevian misses (p:q:r)");
  }
  return P;
}

Point bary_to_cartesian(const ReferenceFrame& frame, const HomogeneousTriple& p,
                        const ToleranceProfile& tol) {
  HomogeneousTriple c = canonical(p);
  double s = c.u + c.v + c.w;
  if (std::fabs(s) <= tol.det_tol)
    throw GeomError(GeomErrc::point_at_infinity, "bary_to_cartesian: coordinate sum is zero");
  Point a = frame.t.v1(), b = frame.t.v2(), g = frame.t.v3();
  return {(c.u * a.x + c.v * b.x + c.w * g.x) / s, (c.u * a.y + c.v * b.y + c.w * g.y) / s};
}

HomogeneousTriple cartesian_to_bary(const ReferenceFrame& frame, Point p) {
  Point a = frame.t.v1(), b = frame.t.v2(), c = frame.t.v3();
  return bary_point(signed_area(p, b, c), signed_area(a, p, c), signed_area(a, b, p));
}

double on_perpendicular_bisector_form(const ReferenceFrame& frame, Point p, FrameSide side,
                                      const ToleranceProfile& tol) {
  if (equilateral_residual(frame.t) >= tol.angle_tol)
    throw GeomError(GeomErrc::non_equilateral_frame,
                    "perpendicular bisector form needs an equilateral frame");
  Point s1, s2;
  switch (side) {
    case FrameSide::YZ: s1 = frame.t.v2(); s2 = frame.t.v3(); break;
    case FrameSide::ZX: s1 = frame.t.v3(); s2 = frame.t.v1(); break;
    case FrameSide::XY: s1 = frame.t.v1(); s2 = frame.t.v2(); break;
  }
  Line bis = perpendicular_bisector(s1, s2, tol);
  return std::fabs(bis.eval(p));
}

}  // namespace morley
