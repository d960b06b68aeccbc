#pragma once

#include <cstdint>
#include <string>

#include "core/instance.hpp"
#include "core/solver.hpp"

namespace pierce {

// File schema (JSON):
//   {
//     "version": "1",
//     "families": [{"name": "...", "bodies": [[[x,y], ...], ...]}, ...],
//     "anchor": [x, y],            optional
//     "expected": {...}            optional, opaque regression block
//   }
// Vertex lists are hull-normalized on load so every body satisfies the
// ConvexBody invariants.
std::string instance_to_json(const Instance& in);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& in, const std::string& path);

// Opaque "expected" block of a corpus file, "{}" when absent.
std::string expected_block(const std::string& path);

std::string result_to_json(const PiercingResult& r);

struct StoredResult {
  int family_index = 0;  // 0-based
  std::array<Line, 3> lines{};
  Point m{};
  double residual = 0.0;
  std::array<double, 5> x{};
};
StoredResult result_from_json(const std::string& text);

// Exact re-verification of a stored result against an instance: every body
// of the named family must meet one of the lines under closed semantics and
// the lines must be concurrent at m. Throws verify_failed.
void verify_result(const Instance& in, const StoredResult& r);

// n thin rectangles around pairwise non-parallel lines through a small disk
// near the origin, clipped to a bounding box; any two intersect, so T(3)
// holds by the common-point argument. Asserted anyway.
Family gen_pairwise_intersecting(int n, std::uint64_t seed);

// Five families of 3..6 bodies each, pairwise intersecting across the whole
// union, so the cross-family T(3) hypothesis holds. Asserted anyway.
Instance gen_colorful(std::uint64_t seed);

}  // namespace pierce
