// The full labeled figure: triangle A,B,C; inner triangle X,Y,Z; flank
// intersections D = BZ^CY, E = CX^AZ, F = AY^BX; circumcenters P,Q,R of
// AYZ, BZX, CXY. Immutable once built.

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "morley/geom.hpp"

namespace morley {

inline constexpr std::array<const char*, 12> kConfigurationLabels = {
    "A", "B", "C", "X", "Y", "Z", "D", "E", "F", "P", "Q", "R"};

class MorleyConfiguration {
public:
  // Derives D,E,F and P,Q,R from the six independent vertices. Both ABC and
  // XYZ must be counterclockwise.
  static MorleyConfiguration from_cevian_vertices(Point A, Point B, Point C,
                                                  Point X, Point Y, Point Z,
                                                  const ToleranceProfile& tol = default_tol());

  // Accepts all twelve points as stored (exact round-trips), after checking
  // the derivation invariants within tolerance.
  static MorleyConfiguration from_points(const std::array<Point, 12>& pts,
                                         const ToleranceProfile& tol = default_tol());

  Point A() const { return pts_[0]; }
  Point B() const { return pts_[1]; }
  Point C() const { return pts_[2]; }
  Point X() const { return pts_[3]; }
  Point Y() const { return pts_[4]; }
  Point Z() const { return pts_[5]; }
  Point D() const { return pts_[6]; }
  Point E() const { return pts_[7]; }
  Point F() const { return pts_[8]; }
  Point P() const { return pts_[9]; }
  Point Q() const { return pts_[10]; }
  Point R() const { return pts_[11]; }

  const std::array<Point, 12>& points() const { return pts_; }

  Triangle abc() const { return Triangle(A(), B(), C()); }
  Triangle xyz() const { return Triangle(X(), Y(), Z()); }

  // Longest side of ABC; the length scale for relative tolerances.
  double diameter() const { return diameter_; }

  MorleyConfiguration transformed(const Similarity& s,
                                  const ToleranceProfile& tol = default_tol()) const;

private:
  explicit MorleyConfiguration(const std::array<Point, 12>& pts);

  std::array<Point, 12> pts_;
  double diameter_ = 0.0;
};

// Flat record interchange format: one "LABEL x y" line per point in the fixed
// label order, coordinates as hexadecimal floats for exact round-trips.
std::string to_record(const MorleyConfiguration& cfg);
void write_record(std::ostream& os, const MorleyConfiguration& cfg);
MorleyConfiguration parse_record(std::string_view text,
                                 const ToleranceProfile& tol = default_tol());
MorleyConfiguration read_record(std::istream& is,
                                const ToleranceProfile& tol = default_tol());

}  // namespace morley
