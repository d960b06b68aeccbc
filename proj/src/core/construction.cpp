#include "core/construction.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace pierce {

namespace {
constexpr double kPi = std::numbers::pi;
}

Epsilon Epsilon::from_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) fail(Errc::invalid_argument, "delta must be positive");
  Epsilon e;
  e.delta = delta;
  e.eps = delta / (4.0 * kPi);
  if (5.0 * e.eps >= 1.0)
    fail(Errc::invalid_argument, "delta too large, the shrunken simplex is empty");
  return e;
}

static void check_sum(const std::array<double, 5>& c) {
  double s = 0.0;
  for (double v : c) {
    if (!std::isfinite(v)) fail(Errc::invalid_argument, "non-finite simplex coordinate");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-12) fail(Errc::invalid_argument, "simplex coordinates must sum to 1");
}

SimplexPoint SimplexPoint::constrained(const std::array<double, 5>& c, double eps) {
  check_sum(c);
  for (double v : c)
    if (v + 1e-15 < eps) fail(Errc::invalid_argument, "coordinate below the eps floor");
  return SimplexPoint(c);
}

SimplexPoint SimplexPoint::relaxed(const std::array<double, 5>& c) {
  check_sum(c);
  for (double v : c)
    if (v < -1e-12) fail(Errc::invalid_argument, "negative simplex coordinate");
  return SimplexPoint(c);
}

std::array<Point, 5> circle_points(const SimplexPoint& x) {
  std::array<Point, 5> f;
  double cum = 0.0;
  for (int i = 0; i < 4; ++i) {
    cum += x[i];
    const double a = 2.0 * kPi * cum;
    f[i] = {std::cos(a), std::sin(a)};
  }
  f[4] = {1.0, 0.0};
  return f;
}

LineTriple line_triple(const SimplexPoint& x) {
  LineTriple t;
  t.f = circle_points(x);
  t.l1 = Line::through(t.f[0], t.f[3]);
  t.l2 = Line::through(t.f[1], t.f[4]);
  const LineIntersection ix = line_line_intersection(t.l1, t.l2);
  if (ix.kind != LineIntersection::Kind::point)
    fail(Errc::internal, "chords f1f4 and f2f5 failed to cross");
  t.m = ix.p;
  if (!(norm(t.m) < 1.0)) fail(Errc::internal, "line intersection escaped the unit disk");
  t.l3 = Line::through(t.f[2], t.m);
  return t;
}

const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::R1a: return "R1a";
    case RegionLabel::R1b: return "R1b";
    case RegionLabel::R2: return "R2";
    case RegionLabel::R3: return "R3";
    case RegionLabel::R4: return "R4";
    case RegionLabel::R5: return "R5";
    case RegionLabel::Pierced: return "Pierced";
  }
  return "?";
}

static double angle_in_0_2pi(Point p) {
  double a = std::atan2(p.y, p.x);
  if (a <= 0.0) a += 2.0 * kPi;
  return a;
}

RegionGeometry regions(const LineTriple& t) {
  RegionGeometry rg;
  for (int i = 0; i < 4; ++i) rg.arc_start[i] = angle_in_0_2pi(t.f[i]);
  rg.arc_start[4] = 2.0 * kPi;

  // Second crossing of l3 with the circle. l3 is a secant through f3, so
  // the other solution of |f3 + s*d|^2 = 1 is s = -2*(f3 . d).
  const double s = -2.0 * dot(t.f[2], t.l3.dir);
  if (s == 0.0) fail(Errc::internal, "l3 degenerated to a tangent");
  const Point g = t.f[2] + s * t.l3.dir;
  rg.theta_g = angle_in_0_2pi(g);
  // The extension of l3 beyond m enters the sector vertical to the one
  // carrying f3, which is the one bordered by the arc f5..f1.
  if (!(rg.theta_g < rg.arc_start[0]))
    fail(Errc::internal, "l3 exit point left the f5..f1 arc");

  rg.arc_mid[(int)RegionLabel::R1a] = 0.5 * rg.theta_g;
  rg.arc_mid[(int)RegionLabel::R1b] = 0.5 * (rg.theta_g + rg.arc_start[0]);
  rg.arc_mid[(int)RegionLabel::R2] = 0.5 * (rg.arc_start[0] + rg.arc_start[1]);
  rg.arc_mid[(int)RegionLabel::R3] = 0.5 * (rg.arc_start[1] + rg.arc_start[2]);
  rg.arc_mid[(int)RegionLabel::R4] = 0.5 * (rg.arc_start[2] + rg.arc_start[3]);
  rg.arc_mid[(int)RegionLabel::R5] = 0.5 * (rg.arc_start[3] + 2.0 * kPi);

  rg.label_by_code.fill(-1);
  const Line* lines[3] = {&t.l1, &t.l2, &t.l3};
  for (int r = 0; r < 6; ++r) {
    // Perturbation step scaled to the arc so a retry stays on it.
    double span = 2.0 * kPi;
    switch ((RegionLabel)r) {
      case RegionLabel::R1a: span = rg.theta_g; break;
      case RegionLabel::R1b: span = rg.arc_start[0] - rg.theta_g; break;
      default: span = rg.arc_mid[r] - rg.arc_start[r - 2]; break;
    }
    const double step = std::min(1e-6, std::abs(span) / 8.0);
    bool ok = false;
    for (int attempt = 0; attempt < 9 && !ok; ++attempt) {
      const int sway = (attempt + 1) / 2 * (attempt % 2 ? 1 : -1);
      const double a = rg.arc_mid[r] + step * sway;
      const Point p{std::cos(a), std::sin(a)};
      int sv[3];
      ok = true;
      for (int li = 0; li < 3; ++li) {
        sv[li] = side_of_line(*lines[li], p);
        if (sv[li] == 0) {
          ok = false;
          break;
        }
      }
      if (ok) rg.signs[r] = {sv[0], sv[1], sv[2]};
    }
    if (!ok) fail(Errc::degenerate_regions, "arc midpoint kept landing on a line");
    const int code = ((rg.signs[r][0] > 0) << 2) | ((rg.signs[r][1] > 0) << 1) | (rg.signs[r][2] > 0);
    if (rg.label_by_code[code] != -1) fail(Errc::degenerate_regions, "duplicate region sign vector");
    rg.label_by_code[code] = r;
  }
  return rg;
}

RegionLabel classify(const ConvexBody& b, const LineTriple& t, const RegionGeometry& rg) {
  const Line* lines[3] = {&t.l1, &t.l2, &t.l3};
  for (const Line* l : lines)
    if (line_intersects_body(*l, b)) return RegionLabel::Pierced;
  // The body avoids all three lines and is connected, so every vertex sits
  // strictly on the same side of each; the first vertex determines the cell.
  const Point v0 = b.vertices.front();
  int code = 0;
  for (int li = 0; li < 3; ++li)
    code |= (signed_distance(*lines[li], v0) > 0.0) << (2 - li);
  const int r = rg.label_by_code[code];
  if (r < 0) fail(Errc::internal, "body sign vector matches no region");
  return (RegionLabel)r;
}

RegionLabel classify(const ConvexBody& b, const LineTriple& t) { return classify(b, t, regions(t)); }

ColorSet color_presence(const LineTriple& t, const RegionGeometry& rg, const Family& fam) {
  ColorSet cs;
  for (const ConvexBody& b : fam.bodies) {
    switch (classify(b, t, rg)) {
      case RegionLabel::R1a:
      case RegionLabel::R1b: cs.add(1); break;
      case RegionLabel::R2: cs.add(2); break;
      case RegionLabel::R3: cs.add(3); break;
      case RegionLabel::R4: cs.add(4); break;
      case RegionLabel::R5: cs.add(5); break;
      case RegionLabel::Pierced: break;
    }
  }
  return cs;
}

ColorSet color_presence(const SimplexPoint& x, const Family& fam) {
  const LineTriple t = line_triple(x);
  return color_presence(t, regions(t), fam);
}

}  // namespace pierce
