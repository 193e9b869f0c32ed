#include "tqft/bracket/drawing.hpp"

#include <algorithm>
#include <cmath>

#include "tqft/errors.hpp"

namespace tqft::bracket {

namespace {

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

}  // namespace

Curve hull_offset(const std::vector<Point>& sites, double r, double height, Color color, int samples) {
  Curve c;
  c.color = color;
  for (int k = 0; k < samples; ++k) {
    const double th = 2 * M_PI * k / samples, nx = std::cos(th), ny = std::sin(th);
    const Point* best = &sites.front();
    for (const auto& s : sites)
      if (s.x * nx + s.y * ny > best->x * nx + best->y * ny + 1e-12) best = &s;
    c.points.push_back({best->x + r * nx, best->y + r * ny});
    c.heights.push_back(height);
  }
  return c;
}

Curve thin_ray_loop(Point from, double dx, double dy, double length, Color color, double width) {
  const double norm = std::hypot(dx, dy), ux = dx / norm, uy = dy / norm, nx = -uy * width / 2,
               ny = ux * width / 2;
  Curve c;
  c.color = color;
  c.points = {{from.x + nx, from.y + ny},
              {from.x + length * ux + nx, from.y + length * uy + ny},
              {from.x + length * ux - nx, from.y + length * uy - ny},
              {from.x - nx, from.y - ny}};
  c.heights = {10.0, 0.0, -10.0, 0.0};
  return c;
}

LinkDiagram build_diagram(const std::vector<Curve>& curves) {
  struct Event {
    size_t seg;
    double t;
    size_t crossing;
  };
  struct Crossing {
    size_t curve[2];  // [under, over]
    double dir[2][2];
  };
  std::vector<std::vector<Event>> events(curves.size());
  std::vector<Crossing> crossings;

  for (size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& A = curves[ci].points;
    for (size_t i = 0; i < A.size(); ++i) {
      const Point p1 = A[i], p2 = A[(i + 1) % A.size()];
      for (size_t cj = ci; cj < curves.size(); ++cj) {
        const auto& B = curves[cj].points;
        for (size_t j = cj == ci ? i + 1 : 0; j < B.size(); ++j) {
          if (cj == ci && (j == i + 1 || (i == 0 && j + 1 == A.size()))) continue;
          const Point q1 = B[j], q2 = B[(j + 1) % B.size()];
          const double ux = p2.x - p1.x, uy = p2.y - p1.y, wx = q2.x - q1.x, wy = q2.y - q1.y;
          const double den = cross(ux, uy, wx, wy);
          if (std::abs(den) < 1e-15) continue;
          const double t = cross(q1.x - p1.x, q1.y - p1.y, wx, wy) / den;
          const double s = cross(q1.x - p1.x, q1.y - p1.y, ux, uy) / den;
          if (t <= 0 || t >= 1 || s <= 0 || s >= 1) continue;
          const double hi = curves[ci].heights[i], hj = curves[cj].heights[j];
          if (hi == hj) throw DomainError("build_diagram: crossing between segments of equal height");
          const bool i_over = hi > hj;
          Crossing x{};
          x.curve[i_over ? 1 : 0] = ci;
          x.curve[i_over ? 0 : 1] = cj;
          const double di[2] = {ux, uy}, dj[2] = {wx, wy};
          std::copy(di, di + 2, x.dir[i_over ? 1 : 0]);
          std::copy(dj, dj + 2, x.dir[i_over ? 0 : 1]);
          const size_t id = crossings.size();
          crossings.push_back(x);
          events[ci].push_back({i, t, id});
          events[cj].push_back({j, s, id});
        }
      }
    }
  }

  // Arc k of a curve runs from its k-th crossing event to the next one.
  LinkDiagram d;
  std::vector<std::vector<int>> in_arc(crossings.size(), std::vector<int>(2)),
      out_arc(crossings.size(), std::vector<int>(2));
  int next_label = 1;
  std::vector<Color> loop_colors;
  for (size_t c = 0; c < curves.size(); ++c) {
    auto& ev = events[c];
    if (ev.empty()) {
      ++d.loops;
      loop_colors.push_back(curves[c].color);
      continue;
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
      return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
    });
    const int m = static_cast<int>(ev.size()), base = next_label;
    next_label += m;
    for (int k = 0; k < m; ++k) {
      const Crossing& x = crossings[ev[k].crossing];
      int role = x.curve[1] == c ? 1 : 0;
      if (x.curve[0] == c && x.curve[1] == c) {
        // Self-crossing: the visit along the higher segment is the over-pass.
        for (const auto& other : ev)
          if (other.crossing == ev[k].crossing && &other != &ev[k])
            role = curves[c].heights[ev[k].seg] > curves[c].heights[other.seg] ? 1 : 0;
      }
      in_arc[ev[k].crossing][role] = base + (k + m - 1) % m;
      out_arc[ev[k].crossing][role] = base + k;
    }
    d.colors.push_back(curves[c].color);
  }
  d.colors.insert(d.colors.end(), loop_colors.begin(), loop_colors.end());

  for (size_t k = 0; k < crossings.size(); ++k) {
    const auto& x = crossings[k];
    const double c = cross(x.dir[0][0], x.dir[0][1], x.dir[1][0], x.dir[1][1]);
    const int a = in_arc[k][0], cc = out_arc[k][0];
    const int b = c < 0 ? out_arc[k][1] : in_arc[k][1], dd = c < 0 ? in_arc[k][1] : out_arc[k][1];
    d.crossings.push_back({a, b, cc, dd});
  }
  return d;
}

}  // namespace tqft::bracket
