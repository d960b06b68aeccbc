#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/geom.hpp"

namespace pierce {

struct Family {
  std::string name;
  std::vector<ConvexBody> bodies;
};

// 1 to 5 families. A single family stands for five logical copies of itself;
// the colorful machinery collapses to the plain statement in that case.
// Rendering tolerates an empty family list.
struct Instance {
  std::vector<Family> families;
  std::optional<Point> anchor;
};

std::vector<Point> all_vertices(const Instance& in);

// Throws invalid_argument unless 1..5 nonempty families of valid bodies.
void validate_instance(const Instance& in);

Instance transform_instance(const Instance& in, const Similarity& sim);

// Similarity mapping every body strictly inside the disk of radius 0.9
// centered at the origin. The margin keeps circle points away from the sets.
std::pair<Instance, Similarity> normalize_instance(const Instance& in);

// Similarity mapping every body strictly inside the unit disk and q exactly
// to (1,0). q must be strictly outside the convex hull of all bodies.
std::pair<Instance, Similarity> anchored_normalize(const Instance& in, Point q);

}  // namespace pierce
