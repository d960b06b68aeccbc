#pragma once

#include <array>
#include <cstdint>

#include "core/instance.hpp"

namespace pierce {

// eps is derived from the fatness radius delta as delta/(4*pi). The shrunken
// simplex is nonempty only while 5*eps < 1.
struct Epsilon {
  double delta = 0.0;
  double eps = 0.0;
  static Epsilon from_delta(double delta);
};

// Point of the 4-simplex: five nonnegative coordinates summing to 1. The
// constrained constructor additionally enforces the eps floor on every
// coordinate; the relaxed one admits the plain simplex (grid search support).
class SimplexPoint {
 public:
  SimplexPoint() : c_{0.2, 0.2, 0.2, 0.2, 0.2} {}
  static SimplexPoint constrained(const std::array<double, 5>& c, double eps);
  static SimplexPoint relaxed(const std::array<double, 5>& c);

  const std::array<double, 5>& coords() const { return c_; }
  double operator[](int i) const { return c_[i]; }

 private:
  explicit SimplexPoint(const std::array<double, 5>& c) : c_(c) {}
  std::array<double, 5> c_;
};

// f1..f5 on the unit circle at cumulative angles 2*pi*sum(x_1..x_i).
// f5 is pinned to (1,0) identically and never goes through trig.
std::array<Point, 5> circle_points(const SimplexPoint& x);

struct LineTriple {
  Line l1, l2, l3;
  Point m;                  // l1 x l2; l3 passes through it by construction
  std::array<Point, 5> f;
};

// l1 = f1f4, l2 = f2f5, l3 = f3M. The chords interleave for any valid x, so
// m exists and lies strictly inside the unit disk.
LineTriple line_triple(const SimplexPoint& x);

enum class RegionLabel : int { R1a = 0, R1b, R2, R3, R4, R5, Pierced };
const char* to_string(RegionLabel r);

// The three concurrent lines split the disk into six open regions, each a
// unique strict sign vector with respect to (l1,l2,l3). Names follow the
// circle: R_i borders the arc f_{i-1}..f_i, and the region at the arc
// f5..f1 is split by l3 into R1a (next to f5) and R1b (next to f1).
struct RegionGeometry {
  std::array<std::array<int, 3>, 6> signs;  // indexed by RegionLabel 0..5
  std::array<double, 6> arc_mid;            // midpoint angle of each boundary arc
  std::array<double, 5> arc_start;          // angles of f1..f5 in (0, 2pi]
  double theta_g = 0.0;                     // second circle crossing of l3
  std::array<int, 8> label_by_code{};       // sign code -> region, -1 unrealized
};
RegionGeometry regions(const LineTriple& t);

RegionLabel classify(const ConvexBody& b, const LineTriple& t, const RegionGeometry& rg);
RegionLabel classify(const ConvexBody& b, const LineTriple& t);

struct ColorSet {
  std::uint8_t bits = 0;
  void add(int color) { bits = std::uint8_t(bits | (1u << (color - 1))); }
  bool has(int color) const { return (bits >> (color - 1)) & 1u; }
  bool empty() const { return bits == 0; }
};

// Colors 1..5 present for the family at x: color i is present when some body
// sits inside R_i (with R1a and R1b both counting as color 1). An empty set
// means the three lines pierce every body.
ColorSet color_presence(const SimplexPoint& x, const Family& fam);
ColorSet color_presence(const LineTriple& t, const RegionGeometry& rg, const Family& fam);

}  // namespace pierce
