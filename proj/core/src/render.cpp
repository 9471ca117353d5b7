#include "gamma0fd/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace gamma0fd {

namespace {

arc_endpoint cusp_endpoint(const cusp& c) {
  arc_endpoint e;
  if (c.is_infinity()) {
    e.at_infinity = true;
    return e;
  }
  e.p = quad_point::of(c.num, 0, c.den, 1);
  return e;
}

arc_endpoint corner_endpoint(const quad_point& p) { return {false, p}; }

geodesic_edge make_edge(edge_side side, const cusp& ideal1, const cusp& ideal2,
                        arc_endpoint from, arc_endpoint to) {
  geodesic_edge e;
  e.side = side;
  e.from = from;
  e.to = to;
  if (ideal1.is_infinity() || ideal2.is_infinity()) {
    e.vertical = true;
    const cusp& fin = ideal1.is_infinity() ? ideal2 : ideal1;
    e.x = rational::of(fin.num, fin.den);
    return e;
  }
  const rational r1 = rational::of(ideal1.num, ideal1.den);
  const rational r2 = rational::of(ideal2.num, ideal2.den);
  e.center = (r1 + r2) * rational::of(1, 2);
  e.radius = abs(r1 - r2) * rational::of(1, 2);
  return e;
}

std::string fixed6(double v) {
  if (v == 0) v = 0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fixed2(double v) {
  if (v == 0) v = 0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct frame {
  double sx0, sy0, scale, clip;
  double px(double x) const { return (x - sx0) * scale; }
  double py(double y) const { return (clip - y) * scale; }
};

// Exact x of an endpoint (vertical edges pass their own abscissa for the
// infinite end).
rational endpoint_x(const geodesic_edge& e, const arc_endpoint& pt) {
  if (pt.at_infinity) return e.x;
  return pt.p.real_part();
}

std::string edge_path(const geodesic_edge& e, const frame& f) {
  const auto pos = [&](const arc_endpoint& pt) {
    if (pt.at_infinity) return std::pair<double, double>{e.x.to_double(), f.clip};
    return std::pair<double, double>{pt.p.x(), pt.p.y()};
  };
  const auto [x1, y1] = pos(e.from);
  const auto [x2, y2] = pos(e.to);
  std::string d = "M " + fixed6(f.px(x1)) + " " + fixed6(f.py(y1));
  if (e.vertical) {
    d += " L " + fixed6(f.px(x2)) + " " + fixed6(f.py(y2));
    return d;
  }
  const double r = e.radius.to_double() * f.scale;
  // Both endpoints sit on the upper half of the circle, so the upper arc
  // between them never crosses the axis; in screen coordinates it is the
  // positive sweep exactly when the path heads rightward.
  const int sweep = endpoint_x(e, e.from) < endpoint_x(e, e.to) ? 1 : 0;
  d += " A " + fixed6(r) + " " + fixed6(r) + " 0 0 " + std::to_string(sweep) + " " +
       fixed6(f.px(x2)) + " " + fixed6(f.py(y2));
  return d;
}

std::string pair_color(size_t k, size_t total) {
  const double hue = 360.0 * static_cast<double>(k) / static_cast<double>(total);
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.4f,70%%,45%%)", hue);
  return buf;
}

}  // namespace

std::vector<geodesic_edge> triangle_image(const mat2& g) {
  const cusp at_inf{1, 0};
  const cusp g_inf = mobius_cusp(g, at_inf);
  const cusp g_half = mobius_cusp(g, make_cusp(1, 2));
  const cusp g_neg_half = mobius_cusp(g, make_cusp(-1, 2));
  const cusp g_one = mobius_cusp(g, make_cusp(1, 1));
  const cusp g_neg_one = mobius_cusp(g, make_cusp(-1, 1));
  const quad_point c3 = mobius_quad(g, corner_zeta3());
  const quad_point c6 = mobius_quad(g, corner_zeta6());

  std::vector<geodesic_edge> out;
  out.push_back(make_edge(edge_side::left, g_half, g_inf, corner_endpoint(c6),
                          cusp_endpoint(g_inf)));
  out.push_back(make_edge(edge_side::right, g_neg_half, g_inf, corner_endpoint(c3),
                          cusp_endpoint(g_inf)));
  out.push_back(make_edge(edge_side::base, g_neg_one, g_one, corner_endpoint(c3),
                          corner_endpoint(c6)));
  return out;
}

std::string render_svg(const coset_table& t, const std::vector<gluing_pair>& pairs,
                       const render_options& opt) {
  const frame f{opt.x_min, 0.0, opt.width_px / (opt.x_max - opt.x_min), opt.clip_y};
  const int height_px = static_cast<int>(std::lround((opt.clip_y) * f.scale));

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width_px) +
         "\" height=\"" + std::to_string(height_px) + "\" viewBox=\"0 0 " +
         std::to_string(opt.width_px) + " " + std::to_string(height_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto edges_of = [&](const coset_rep& r) { return triangle_image(word_to_matrix(r.word())); };

  svg += "<g fill=\"none\" stroke=\"#666666\" stroke-width=\"0.7\">\n";
  for (const coset_rep& r : t.reps)
    for (const geodesic_edge& e : edges_of(r))
      svg += "<path d=\"" + edge_path(e, f) + "\"/>\n";
  svg += "</g>\n";

  const auto arc_path = [&](const boundary_arc& a) {
    for (const geodesic_edge& e : edges_of(a.rep))
      if (e.side == a.edge) return edge_path(e, f);
    throw error("edge lookup failed while rendering " + a.str());
  };

  svg += "<g fill=\"none\" stroke-width=\"1.8\">\n";
  for (size_t k = 0; k < pairs.size(); ++k) {
    const std::string color = pair_color(k, pairs.size());
    svg += "<path d=\"" + arc_path(pairs[k].arc1) + "\" stroke=\"" + color + "\"/>\n";
    if (!(pairs[k].arc1 == pairs[k].arc2))
      svg += "<path d=\"" + arc_path(pairs[k].arc2) + "\" stroke=\"" + color + "\"/>\n";
  }
  for (const boundary_arc& a : boundary_arcs(t))
    if (a.ray)
      svg += "<path d=\"" + arc_path(a) + "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  svg += "</g>\n";

  if (opt.labels) {
    svg += "<g font-family=\"monospace\" text-anchor=\"middle\" fill=\"#222222\">\n";
    for (const coset_rep& r : t.reps) {
      const mat2 g = word_to_matrix(r.word());
      const quad_point anchor = mobius_quad(g, quad_point::of(0, 5, 4, 1));
      const quad_point c3 = mobius_quad(g, corner_zeta3());
      const quad_point c6 = mobius_quad(g, corner_zeta6());
      const double span = std::hypot(c6.x() - c3.x(), c6.y() - c3.y()) * f.scale;
      const double size = std::min(20.0, std::max(1.2, 0.045 * span));
      svg += "<text x=\"" + fixed6(f.px(anchor.x())) + "\" y=\"" + fixed6(f.py(anchor.y())) +
             "\" font-size=\"" + fixed2(size) + "\">" + r.str() + "</text>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gamma0fd
