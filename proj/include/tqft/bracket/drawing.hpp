#pragma once

#include <vector>

#include "tqft/bracket/diagram.hpp"

namespace tqft::bracket {

struct Point {
  double x = 0, y = 0;
};

/// Closed polygonal curve in the plane; heights[k] is the height of the segment
/// from points[k] to points[k+1] (cyclically). Where two segments cross, the
/// higher one passes over.
struct Curve {
  std::vector<Point> points;
  std::vector<double> heights;
  Color color;
};

/// Boundary of (convex hull of `sites`) + disk of radius r, sampled at `samples` angles.
Curve hull_offset(const std::vector<Point>& sites, double r, double height, Color color, int samples = 96);

/// Thin loop along the ray from `from` in direction (dx, dy) of the given length;
/// one long side passes over everything, the other under. Links once with every
/// curve that separates `from` from the far end.
Curve thin_ray_loop(Point from, double dx, double dy, double length, Color color, double width = 0.004);

/// PD code of the projection. Curves must be in general position (transverse
/// crossings, distinct heights at each crossing). Curve colors are carried over
/// to the matching components.
LinkDiagram build_diagram(const std::vector<Curve>& curves);

}  // namespace tqft::bracket
