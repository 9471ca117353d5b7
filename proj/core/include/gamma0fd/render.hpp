#pragma once

#include <string>
#include <vector>

#include "gamma0fd/domain.hpp"
#include "gamma0fd/geometry.hpp"

namespace gamma0fd {

// Endpoint of a drawn edge: a cusp on the real axis, the point at
// infinity, or an interior corner.
struct arc_endpoint {
  bool at_infinity = false;
  quad_point p;  // real (ny = 0) for finite cusps
};

// One edge of one translated triangle.  The supporting geodesic is either
// the vertical line Re z = x or the semicircle with the given rational
// center and radius; the drawn piece runs from `from` to `to`.
struct geodesic_edge {
  edge_side side = edge_side::base;
  bool vertical = false;
  rational x;
  rational center, radius;
  arc_endpoint from, to;
};

// Images of the standard triangle's three edges under g, in order
// left, right, base.  All geometry exact.
std::vector<geodesic_edge> triangle_image(const mat2& g);

struct render_options {
  double clip_y = 2.2;       // vertical ceiling of the picture
  int width_px = 1000;
  double x_min = -0.75;
  double x_max = 0.75;
  bool labels = true;
};

// Deterministic SVG document: one path per triangle edge, pair-colored
// strokes over the boundary arcs (the two rays dashed), one label per
// triangle.  Floating point enters only at serialization, at fixed
// precision.
std::string render_svg(const coset_table& t, const std::vector<gluing_pair>& pairs,
                       const render_options& opt = {});

}  // namespace gamma0fd
