#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/construction.hpp"
#include "core/transversal.hpp"

namespace pierce {

struct SolveParams {
  double delta0 = 0.05;
  double delta_min = 1e-6;
  double shrink = 0.5;
  int grid_k = 12;
  int refine_rounds = 8;
  long long budget = 5000000;  // (x, family) evaluations
  bool skip_t3 = false;
  std::optional<Point> anchor;
  int threads = 0;  // 0: PIERCE3_THREADS or 1
};

struct TraceEntry {
  double delta = 0.0;
  Point m{};                     // normalized coordinates
  std::array<Point, 3> p{};      // unit-distance points along each line
  double violation = 0.0;        // best violation reached at this delta
};

struct PiercingResult {
  int family_index = 0;
  std::string family_name;
  SimplexPoint x;
  LineTriple triple_normalized;
  std::array<Line, 3> lines{};   // original coordinates
  Point m{};                     // original coordinates
  double residual = 0.0;         // original coordinates, 0 means exact
  std::vector<TraceEntry> trace;
  Similarity normalization;      // original -> normalized
  long long evaluations = 0;
};

// max over bodies of max(0, min-line-distance - delta). Zero exactly when
// the delta-thickened family is pierced by the triple of x.
double violation(const SimplexPoint& x, const Family& fam, double delta);

// Searches the shrunken simplex for a triple piercing some family, walking a
// shrinking delta schedule and refining locally around the best cell.
PiercingResult solve_colorful(const Instance& in, const SolveParams& params);

// Corollary form: the family replicated five times.
PiercingResult solve_single(const Family& fam, const SolveParams& params);

// Anchored form: one piercing line passes through q (within 1e-9), q must be
// strictly outside the hull of the instance.
PiercingResult solve_anchored(const Instance& in, Point q, SolveParams params);

}  // namespace pierce
