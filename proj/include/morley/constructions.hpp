// Builds and checks the named configurations: the classic trisector figure,
// the generalized-hypothesis residuals, the converse construction from apex
// angles, and the circumcenter six-angle system.

#pragma once

#include <array>

#include "morley/configuration.hpp"
#include "morley/geom.hpp"

namespace morley {

// Apex angles (radians) of the isosceles triangles DYZ, EZX, FXY built
// outward on an equilateral X,Y,Z of side s.
struct ConverseParameters {
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
  double s = 1.0;
};

// base = (pi - apex) / 2 for the isosceles flank triangles.
inline double apex_to_base(double apex) { return (kPi - apex) / 2.0; }
inline double base_to_apex(double base) { return kPi - 2.0 * base; }

struct HypothesisResiduals {
  // |angle(BXC) - fold(120deg + angle(YAZ))| and cyclic, radians
  std::array<double, 3> angle_identity{};
  // angular deviation of X from the bisector of angle BDC and cyclic, radians
  std::array<double, 3> bisector{};
  // X, Y, Z, D, E, F strictly inside ABC
  std::array<bool, 6> interiority{};

  double max_residual() const;
  bool all_interior() const;
};

struct InclinationAngles {
  double x = 0.0;  // angle(XYC) = angle(BZX)
  double y = 0.0;  // angle(YZA) = angle(CXY)
  double z = 0.0;  // angle(ZXB) = angle(AYZ)
  double max_spread = 0.0;  // worst disagreement between the paired measurements
};

// Classic trisector construction: X joins the B- and C-trisectors adjacent
// to side BC, cyclically for Y and Z. Triangle vertices map (v1,v2,v3) ->
// (A,B,C).
MorleyConfiguration classic_morley(const Triangle& t,
                                   const ToleranceProfile& tol = default_tol());

HypothesisResiduals hypothesis_residuals(const MorleyConfiguration& cfg,
                                         const ToleranceProfile& tol = default_tol());

// True iff the derived angles x = 120deg - (e+f)/2 (cyclic) and the derived
// apex wedges 180deg - y - z (cyclic) are all strictly positive and the three
// intersections land on the same side of the frame as their flank apexes.
bool converse_validity(const ConverseParameters& params,
                       const ToleranceProfile& tol = default_tol());

// Builds the configuration at the canonical pose: X at the origin, Y on the
// positive x axis, Z above. A = EZ^FY, B = FX^DZ, C = DY^EX, each required to
// lie on the same side of the corresponding frame side as D, E, F.
MorleyConfiguration converse_construct(const ConverseParameters& params,
                                       const ToleranceProfile& tol = default_tol());

// Both measurements of each inclination must agree to 10 * angle_tol.
InclinationAngles inclination_angles(const MorleyConfiguration& cfg,
                                     const ToleranceProfile& tol = default_tol());

// Whether P, Q, R lie strictly inside triangles AYZ, BZX, CXY.
std::array<bool, 3> circumcenters_interior(const MorleyConfiguration& cfg,
                                           const ToleranceProfile& tol = default_tol());

// The six angles BXR, CXQ, CYP, AYR, AZQ, BZP in that order, radians. With
// require_interior set, throws CircumcenterOutside unless P, Q, R pass the
// interiority condition (classic configurations of right or obtuse triangles
// fail it even though the six-angle identities still hold).
std::array<double, 6> six_angles(const MorleyConfiguration& cfg,
                                 const ToleranceProfile& tol = default_tol(),
                                 bool require_interior = false);

// Residuals of angle(CXR), angle(BXQ) against fold(90deg - x), then the four
// cyclic counterparts at Y and Z against fold(90deg - y), fold(90deg - z).
std::array<double, 6> circumcenter_half_angle_check(const MorleyConfiguration& cfg,
                                                    const ToleranceProfile& tol = default_tol());

// Apex angles measured back from a configuration: d = angle(YDZ) and cyclic,
// with s the mean side of XYZ. Feeding them to converse_construct rebuilds a
// similar figure.
ConverseParameters measure_apex_angles(const MorleyConfiguration& cfg,
                                       const ToleranceProfile& tol = default_tol());

}  // namespace morley
