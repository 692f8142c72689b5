#pragma once

// SVG 1.1 pictures of tropical polytopes in TP^2 and TP^3, drawn in the chart
// x_0 = 0. TP^2 is drawn exactly in (x_1, x_2); TP^3 goes through a fixed
// axonometric projection with polygons painted back to front.

#include "tropohull/tropical.hpp"

#include <string>
#include <vector>

namespace tropohull {

struct SvgOptions {
  // Hyperplanes with finite apex drawn over the polytope, TP^2 only.
  std::vector<TropicalHyperplane> hyperplanes;
  bool label_vertices = true;
  double size = 480;  // width and height in px
};

// Bounded cells of the covector decomposition: 2-cells filled, 1-cells as
// segments, pseudovertices as small dots, input points as labeled dots.
// Throws DimensionError unless every point has 3 or 4 coordinates.
std::string render_svg(const std::vector<TropicalPoint>& points, const SvgOptions& options = {});

}  // namespace tropohull
