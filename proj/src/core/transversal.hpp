#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "core/instance.hpp"

namespace pierce {

// Every line through two distinct vertices of the input (plus two fixed
// directions when only one distinct vertex exists), deduplicated by
// canonical form. Complete for transversal decisions; see the note in the
// implementation.
std::vector<Line> candidate_lines(const std::vector<ConvexBody>& bodies);

// Witness line meeting every body (closed intersection), or nullopt.
std::optional<Line> transversal_exists(const std::vector<ConvexBody>& bodies);

struct T3Counterexample {
  // (family, body) index pairs, ascending.
  std::array<std::pair<int, int>, 3> members;
};

// Checks every triple drawn from three distinct logical families; a short
// instance is replicated round-robin to five logical families. Returns the
// first failing triple in scan order, or nullopt when T(3) holds.
std::optional<T3Counterexample> find_t3_counterexample(const Instance& in);

inline bool has_t3(const Instance& in) { return !find_t3_counterexample(in).has_value(); }

struct PierceCheck {
  bool all_pierced = false;
  std::vector<int> unpierced;
};
PierceCheck pierced_by(const std::vector<Line>& lines, const Family& fam);

struct MinPiercing {
  std::optional<int> k;  // nullopt: more than k_max
  std::vector<Line> lines;
};

// Exact minimum piercing for k_max <= 3 by exhaustive set cover over
// candidate lines. Throws too_large above 5000 candidates.
MinPiercing min_line_piercing(const Family& fam, int k_max);

}  // namespace pierce
