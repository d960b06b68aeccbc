#include "core/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/errors.hpp"

namespace pierce {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

static Point canonical_dir(Point d) {
  const double len = norm(d);
  if (!(len > 0.0) || !std::isfinite(len)) fail(Errc::invalid_argument, "degenerate line direction");
  d = (1.0 / len) * d;
  if (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) d = {-d.x, -d.y};
  return d;
}

Line Line::through(Point a, Point b) {
  if (!finite(a) || !finite(b)) fail(Errc::invalid_argument, "non-finite line point");
  if (dist(a, b) <= tol().sign_eps) fail(Errc::invalid_argument, "line through coincident points");
  return Line{a, canonical_dir(b - a)};
}

Line Line::from_direction(Point anchor, Point d) {
  if (!finite(anchor) || !finite(d)) fail(Errc::invalid_argument, "non-finite line data");
  return Line{anchor, canonical_dir(d)};
}

double signed_distance(const Line& l, Point p) { return cross(l.dir, p - l.anchor); }

int side_of_line(const Line& l, Point p) {
  const double s = signed_distance(l, p);
  if (std::abs(s) <= tol().sign_eps) return 0;
  return s > 0.0 ? 1 : -1;
}

LineIntersection line_line_intersection(const Line& a, const Line& b) {
  const double den = cross(a.dir, b.dir);
  if (std::abs(den) < tol().sign_eps) {
    const bool coincident = std::abs(cross(a.dir, b.anchor - a.anchor)) <= tol().sign_eps;
    return {coincident ? LineIntersection::Kind::coincident : LineIntersection::Kind::parallel, {}};
  }
  const double t = cross(b.anchor - a.anchor, b.dir) / den;
  return {LineIntersection::Kind::point, a.anchor + t * a.dir};
}

ConvexBody convex_hull(std::vector<Point> pts) {
  if (pts.empty()) fail(Errc::empty_geometry, "convex hull of empty point set");
  for (const Point& p : pts)
    if (!finite(p)) fail(Errc::invalid_argument, "non-finite hull input");
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const size_t n = pts.size();
  if (n == 1) return ConvexBody{{pts[0]}};

  // Andrew's monotone chain. Popping on cross <= 0 drops collinear points,
  // so fully collinear input collapses to its two extreme points.
  std::vector<Point> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return ConvexBody{std::move(h)};
}

double signed_area(const ConvexBody& b) {
  double s = 0.0;
  const size_t n = b.vertices.size();
  for (size_t i = 0; i < n; ++i) s += cross(b.vertices[i], b.vertices[(i + 1) % n]);
  return 0.5 * s;
}

bool line_intersects_body(const Line& l, const ConvexBody& b, double eps) {
  bool pos = false, neg = false;
  for (const Point& v : b.vertices) {
    const double s = cross(l.dir, v - l.anchor);
    if (std::abs(s) <= eps) return true;
    (s > 0.0 ? pos : neg) = true;
    if (pos && neg) return true;
  }
  return false;
}

double distance_body_to_line(const ConvexBody& b, const Line& l) {
  bool pos = false, neg = false;
  double best = std::numeric_limits<double>::infinity();
  for (const Point& v : b.vertices) {
    const double s = cross(l.dir, v - l.anchor);
    if (s == 0.0) return 0.0;
    (s > 0.0 ? pos : neg) = true;
    if (pos && neg) return 0.0;
    best = std::min(best, std::abs(s));
  }
  return best;
}

static double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double l2 = dot(ab, ab);
  if (l2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

bool body_contains_point(const ConvexBody& b, Point p, double eps) {
  const size_t n = b.vertices.size();
  if (n == 1) return dist(p, b.vertices[0]) <= eps;
  if (n == 2 || signed_area(b) <= eps) return distance_point_to_body(p, b) <= eps;
  for (size_t i = 0; i < n; ++i) {
    const Point a = b.vertices[i], c = b.vertices[(i + 1) % n];
    if (cross(c - a, p - a) < -eps) return false;
  }
  return true;
}

double distance_point_to_body(Point p, const ConvexBody& b) {
  const size_t n = b.vertices.size();
  if (n == 1) return dist(p, b.vertices[0]);
  if (n > 2 && signed_area(b) > 0.0) {
    bool inside = true;
    for (size_t i = 0; i < n && inside; ++i) {
      const Point a = b.vertices[i], c = b.vertices[(i + 1) % n];
      if (cross(c - a, p - a) < 0.0) inside = false;
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i)
    best = std::min(best, point_segment_distance(p, b.vertices[i], b.vertices[(i + 1) % n]));
  return best;
}

Point closest_point_on_body(Point p, const ConvexBody& b) {
  const size_t n = b.vertices.size();
  if (n == 1) return b.vertices[0];
  double best = std::numeric_limits<double>::infinity();
  Point arg = b.vertices[0];
  for (size_t i = 0; i < n; ++i) {
    const Point a = b.vertices[i], c = b.vertices[(i + 1) % n];
    const Point ab = c - a;
    const double l2 = dot(ab, ab);
    Point cand = a;
    if (l2 > 0.0) {
      const double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
      cand = a + t * ab;
    }
    const double d = dist(p, cand);
    if (d < best) {
      best = d;
      arg = cand;
    }
  }
  return arg;
}

ConvexBody thicken(const ConvexBody& b, double delta, int arc_samples) {
  if (delta < 0.0 || !std::isfinite(delta)) fail(Errc::invalid_argument, "negative thickening radius");
  if (b.vertices.empty()) fail(Errc::empty_geometry, "thicken of empty body");
  if (delta == 0.0) return b;
  const int s = std::max(4, arc_samples);
  const double pi = std::numbers::pi;
  // Samples sit at radius delta/cos(pi/s) so the chords between them stay at
  // distance >= delta from each corner.
  const double r = delta / std::cos(pi / s);
  const double step = 2.0 * pi / s;
  std::vector<Point> out;

  if (b.vertices.size() == 1) {
    const Point v = b.vertices[0];
    for (int i = 0; i < s; ++i) {
      const double a = step * i;
      out.push_back(v + r * Point{std::cos(a), std::sin(a)});
    }
    return convex_hull(out);
  }

  const size_t n = b.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point v = b.vertices[i];
    const Point prev = b.vertices[(i + n - 1) % n];
    const Point next = b.vertices[(i + 1) % n];
    const Point din = v - prev;
    const Point dout = next - v;
    // Outward normals of a CCW polygon.
    const Point nin = (1.0 / norm(din)) * Point{din.y, -din.x};
    const Point nout = (1.0 / norm(dout)) * Point{dout.y, -dout.x};
    const double a0 = std::atan2(nin.y, nin.x);
    double turn = std::atan2(nout.y, nout.x) - a0;
    while (turn < 0.0) turn += 2.0 * pi;
    while (turn >= 2.0 * pi) turn -= 2.0 * pi;
    const int steps = std::max(1, (int)std::ceil(turn / step - 1e-12));
    for (int j = 0; j <= steps; ++j) {
      const double a = a0 + turn * j / steps;
      out.push_back(v + r * Point{std::cos(a), std::sin(a)});
    }
  }
  return convex_hull(out);
}

Point Similarity::apply(Point p) const { return scale * rotate(p, rotation) + translation; }

Point Similarity::invert(Point p) const {
  return rotate((1.0 / scale) * (p - translation), -rotation);
}

Line Similarity::apply(const Line& l) const {
  return Line::from_direction(apply(l.anchor), rotate(l.dir, rotation));
}

Line Similarity::invert(const Line& l) const {
  return Line::from_direction(invert(l.anchor), rotate(l.dir, -rotation));
}

}  // namespace pierce
