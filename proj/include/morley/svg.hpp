// Deterministic SVG rendering of configurations: fixed element order, fixed
// 6-digit decimal formatting, auto-fit viewport. Identical inputs produce
// bytewise-identical documents.

#pragma once

#include <string>

#include "morley/configuration.hpp"

namespace morley {

struct RenderStyle {
  int width = 800;
  int height = 800;
  double margin = 0.08;  // fraction of the canvas on each side, in [0, 0.4)
  double stroke_main = 2.0;
  double stroke_aux = 1.0;
  bool trisectors = true;      // vertex-to-XYZ segments
  bool bisectors = false;      // D-X, E-Y, F-Z
  bool flanks = false;         // isosceles flank segments from D, E, F
  bool circumcircles = false;  // circles about P, Q, R
  bool labels = true;
};

std::string render_svg(const MorleyConfiguration& cfg, const RenderStyle& style = {});

}  // namespace morley
