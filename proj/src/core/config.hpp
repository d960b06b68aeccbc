#pragma once

namespace pierce {

// All robustness knobs live here. sign_eps is the zero band of orientation
// and side predicates, geom_eps the tolerance for geometric equalities,
// dedup_bucket the quantization step for canonical line keys.
struct Tolerances {
  double sign_eps = 1e-12;
  double geom_eps = 1e-9;
  double dedup_bucket = 1e-10;
  int arc_samples = 16;  // offset-arc samples per full turn in thicken()
};

inline const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace pierce
