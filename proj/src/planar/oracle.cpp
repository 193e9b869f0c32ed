#include "tqft/planar/oracle.hpp"

#include "tqft/bracket/drawing.hpp"

namespace tqft::planar {

using bracket::Color;
using bracket::ColorKind;
using bracket::Curve;
using bracket::Point;

namespace {

constexpr double kLower = 0.0;
constexpr double kUpper = 1.0;
constexpr double kRay = 12.0;

Color conj(Color c) {
  c.conj = !c.conj;
  return c;
}

Color omega() { return Color{ColorKind::Omega, 0, false}; }

void add_genus2_layer(std::vector<Curve>& out, const Arrangement2& a, const Color& c, double height, double shift) {
  const Point h1{0, 0}, h2{4, 0};
  for (long t = 0; t < a.alpha; ++t) out.push_back(bracket::hull_offset({h1}, 0.5 + 0.2 * t + shift, height, c));
  for (long t = 0; t < a.beta; ++t) out.push_back(bracket::hull_offset({h2}, 0.5 + 0.2 * t + shift, height, c));
  for (long t = 0; t < a.gamma; ++t)
    out.push_back(bracket::hull_offset({h1, h2}, 1.6 + 0.2 * t + shift, height, c));
}

const Point kHoles3[3] = {{0, 0}, {4, 0}, {2, 3.5}};

void add_genus3_layer(std::vector<Curve>& out, const Arrangement3& a, const Color& c, double height, double shift) {
  for (unsigned m : a.curves) {
    std::vector<Point> sites;
    for (int b = 0; b < 3; ++b)
      if (m & (1u << b)) sites.push_back(kHoles3[b]);
    const double r = sites.size() == 1 ? 0.6 : sites.size() == 2 ? 1.0 : 1.4;
    out.push_back(bracket::hull_offset(sites, r + shift, height, c));
  }
}

}  // namespace

bracket::LinkDiagram pairing_diagram_genus1(const Color& x, const Color& y) {
  std::vector<Curve> cs{bracket::hull_offset({{0, 0}}, 0.5, kLower, x),
                        bracket::hull_offset({{0, 0}}, 0.6, kUpper, conj(y)),
                        bracket::thin_ray_loop({0, 0}, -1, 0.13, kRay, omega())};
  return bracket::build_diagram(cs);
}

bracket::LinkDiagram pairing_diagram_genus2(const Arrangement2& x, const Arrangement2& y, const Color& c) {
  std::vector<Curve> cs;
  add_genus2_layer(cs, x, c, kLower, 0.0);
  add_genus2_layer(cs, y, conj(c), kUpper, 0.1);
  cs.push_back(bracket::thin_ray_loop({0, 0}, -1, 0.13, kRay, omega()));
  cs.push_back(bracket::thin_ray_loop({4, 0}, 1, 0.17, kRay, omega()));
  return bracket::build_diagram(cs);
}

bracket::LinkDiagram pairing_diagram_genus3(const Arrangement3& x, const Arrangement3& y, const Color& c) {
  std::vector<Curve> cs;
  add_genus3_layer(cs, x, c, kLower, 0.0);
  add_genus3_layer(cs, y, conj(c), kUpper, 0.15);
  cs.push_back(bracket::thin_ray_loop(kHoles3[0], -1, -0.55, kRay, omega()));
  cs.push_back(bracket::thin_ray_loop(kHoles3[1], 1, -0.53, kRay, omega()));
  cs.push_back(bracket::thin_ray_loop(kHoles3[2], 0.05, 1, kRay, omega()));
  return bracket::build_diagram(cs);
}

CycNum oracle_pairing(const bracket::LinkDiagram& d, long p, const bracket::Caps& caps) {
  return bracket::bracket_colored_at_root(d, p, caps);
}

Color to_bracket_color(CurveColor c) {
  switch (c) {
    case CurveColor::Z: return Color{ColorKind::Uncolored, 0, false};
    case CurveColor::V: return Color{ColorKind::V, 0, false};
    case CurveColor::Omega: return omega();
  }
  return {};
}

}  // namespace tqft::planar
