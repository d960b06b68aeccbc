#pragma once

#include <cmath>
#include <vector>

#include "core/config.hpp"

namespace pierce {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

bool finite(Point p);
Point rotate(Point p, double angle);

// Line in canonical form: unit direction whose first nonzero component is
// positive, so two Line values describing the same geometric line carry the
// same direction.
struct Line {
  Point anchor;
  Point dir;

  static Line through(Point a, Point b);
  static Line from_direction(Point anchor, Point d);
};

// Perpendicular offset of p from l; positive on the left of dir.
double signed_distance(const Line& l, Point p);

// Sign of cross(l.dir, p - l.anchor): -1, 0 or +1, with a sign_eps zero band.
int side_of_line(const Line& l, Point p);

struct LineIntersection {
  enum class Kind { point, parallel, coincident };
  Kind kind = Kind::parallel;
  Point p{};
};
LineIntersection line_line_intersection(const Line& a, const Line& b);

// Closed convex polygon with CCW vertex order. Segments (2 vertices) and
// single points are legal degenerate bodies.
struct ConvexBody {
  std::vector<Point> vertices;
};

ConvexBody convex_hull(std::vector<Point> points);
double signed_area(const ConvexBody& b);

// Closed intersection test: touching counts.
bool line_intersects_body(const Line& l, const ConvexBody& b, double eps = tol().sign_eps);

// 0 when b straddles l, otherwise the minimum vertex offset.
double distance_body_to_line(const ConvexBody& b, const Line& l);

double distance_point_to_body(Point p, const ConvexBody& b);
Point closest_point_on_body(Point p, const ConvexBody& b);
bool body_contains_point(const ConvexBody& b, Point p, double eps = tol().sign_eps);

// Outer polygonal approximation of the Minkowski sum with the disk of radius
// delta. The result contains the true sum and is contained in the sum with
// radius delta*sec(pi/arc_samples).
ConvexBody thicken(const ConvexBody& b, double delta, int arc_samples = tol().arc_samples);

// Direct similarity p -> scale * R(rotation) * p + translation.
struct Similarity {
  double scale = 1.0;
  double rotation = 0.0;
  Point translation{};

  Point apply(Point p) const;
  Point invert(Point p) const;
  Line apply(const Line& l) const;
  Line invert(const Line& l) const;
};

}  // namespace pierce
