#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pierce::kkm {

// Barycentric point: n nonnegative coordinates summing to 1.
using BaryPoint = std::vector<double>;

struct Triangulation {
  int n = 0;
  int k = 0;
  std::vector<BaryPoint> vertices;             // grid points m/k
  std::vector<std::vector<int>> vertex_multi;  // integer coordinates m, sum k
  std::vector<std::vector<int>> cells;         // n vertex indices per cell
};

// Kuhn (Freudenthal) triangulation of the (n-1)-simplex at resolution k:
// C(k+n-1, n-1) vertices and k^(n-1) cells. Guarded against vertex counts
// above 1e7.
Triangulation triangulate(int n, int k);

// Vertex list only (shared by the solver grid scan).
std::vector<BaryPoint> grid_vertices(int n, int k);

// oracle(color, x) decides membership of x in the open set of that color,
// colors 0..n-1. Must be pure.
using CoverOracle = std::function<bool(int, const BaryPoint&)>;

struct SearchDiagnostics {
  long long evaluations = 0;  // oracle calls
  int rounds_used = 0;
  int face_violations = 0;    // grid vertices not covered by their support colors
  int best_coverage = 0;      // monotone best over the whole search
  std::string note;
};

struct IntersectionResult {
  std::optional<BaryPoint> point;  // membership of every color verified here
  SearchDiagnostics diag;
};

// Searches for a point carrying every color: grid scan, then local
// re-triangulation of the best-covered cell. NotFound is a legitimate
// outcome (openness cannot be certified from finitely many queries).
IntersectionResult kkm_intersection_search(const CoverOracle& oracle, int n, int k,
                                           int refine_rounds, long long max_evals = 4000000);

struct RainbowResult {
  std::optional<BaryPoint> point;
  std::vector<int> permutation;  // permutation[i] = color drawn from covering i
  SearchDiagnostics diag;
};

// Colorful variant: one covering per color class; looks for a point whose
// per-covering memberships admit a perfect matching.
RainbowResult colorful_rainbow_search(const std::vector<CoverOracle>& oracles, int n, int k,
                                      int refine_rounds, long long max_evals = 4000000);

}  // namespace pierce::kkm
