#include "core/instance.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace pierce {

std::vector<Point> all_vertices(const Instance& in) {
  std::vector<Point> pts;
  for (const Family& f : in.families)
    for (const ConvexBody& b : f.bodies) pts.insert(pts.end(), b.vertices.begin(), b.vertices.end());
  return pts;
}

void validate_instance(const Instance& in) {
  if (in.families.empty()) fail(Errc::invalid_argument, "instance has no families");
  if (in.families.size() > 5) fail(Errc::invalid_argument, "instance has more than 5 families");
  for (const Family& f : in.families) {
    if (f.bodies.empty()) fail(Errc::invalid_argument, "family '" + f.name + "' is empty");
    for (const ConvexBody& b : f.bodies) {
      if (b.vertices.empty()) fail(Errc::invalid_argument, "body with no vertices");
      for (const Point& v : b.vertices)
        if (!finite(v)) fail(Errc::invalid_argument, "non-finite body vertex");
      if (signed_area(b) < -tol().sign_eps) fail(Errc::invalid_argument, "body is not CCW");
      const size_t n = b.vertices.size();
      for (size_t i = 0; i + 1 < n; ++i)
        if (b.vertices[i].x == b.vertices[i + 1].x && b.vertices[i].y == b.vertices[i + 1].y)
          fail(Errc::invalid_argument, "repeated consecutive vertex");
    }
  }
}

Instance transform_instance(const Instance& in, const Similarity& sim) {
  Instance out;
  out.families.reserve(in.families.size());
  for (const Family& f : in.families) {
    Family g;
    g.name = f.name;
    g.bodies.reserve(f.bodies.size());
    for (const ConvexBody& b : f.bodies) {
      ConvexBody c;
      c.vertices.reserve(b.vertices.size());
      for (const Point& v : b.vertices) c.vertices.push_back(sim.apply(v));
      g.bodies.push_back(std::move(c));
    }
    out.families.push_back(std::move(g));
  }
  if (in.anchor) out.anchor = sim.apply(*in.anchor);
  return out;
}

std::pair<Instance, Similarity> normalize_instance(const Instance& in) {
  const std::vector<Point> pts = all_vertices(in);
  if (pts.empty()) fail(Errc::empty_geometry, "normalize of empty instance");
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Point& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const Point c{0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
  double r = 0.0;
  for (const Point& p : pts) r = std::max(r, dist(p, c));
  const double s = r > tol().sign_eps ? 0.9 / r : 1.0;
  Similarity sim;
  sim.scale = s;
  sim.rotation = 0.0;
  sim.translation = {-s * c.x, -s * c.y};
  return {transform_instance(in, sim), sim};
}

std::pair<Instance, Similarity> anchored_normalize(const Instance& in, Point q) {
  if (!finite(q)) fail(Errc::invalid_argument, "non-finite anchor");
  const std::vector<Point> pts = all_vertices(in);
  if (pts.empty()) fail(Errc::empty_geometry, "anchored normalize of empty instance");
  const ConvexBody hull = convex_hull(pts);
  if (body_contains_point(hull, q, tol().geom_eps))
    fail(Errc::anchor_inside_hull, "anchor point lies inside or on the hull of the instance");
  const double d0 = distance_point_to_body(q, hull);
  if (d0 <= tol().geom_eps) fail(Errc::anchor_inside_hull, "anchor point too close to the hull");

  // u separates q from the hull: for the closest hull point c, (q-c) makes a
  // non-acute angle with every hull direction, so u*(q - v) >= d0 for all v.
  const Point c = closest_point_on_body(q, hull);
  const Point u = (1.0 / d0) * (q - c);
  double dmax = 0.0;
  for (const Point& p : pts) dmax = std::max(dmax, dist(p, q));
  // Any radius above dmax^2/(2*d0) puts every vertex strictly inside the
  // circle through q centered at q - radius*u.
  const double radius = std::max(dmax * dmax / d0, 2.0 * dmax);
  const Point center = q - radius * u;
  const double theta = std::atan2(u.y, u.x);

  Similarity sim;
  sim.scale = 1.0 / radius;
  sim.rotation = -theta;
  const Point rc = rotate(center, -theta);
  sim.translation = {-rc.x / radius, -rc.y / radius};

  const Point qi = sim.apply(q);
  if (dist(qi, Point{1.0, 0.0}) > tol().geom_eps)
    fail(Errc::internal, "anchored normalization failed to pin the anchor at (1,0)");
  Instance out = transform_instance(in, sim);
  for (const Point& v : all_vertices(out))
    if (!(norm(v) < 1.0)) fail(Errc::internal, "anchored normalization left a vertex outside the disk");
  return {std::move(out), sim};
}

}  // namespace pierce
