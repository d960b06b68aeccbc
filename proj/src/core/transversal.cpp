#include "core/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "core/errors.hpp"

namespace pierce {

namespace {

// Quantized canonical key (direction, origin offset) of a line.
std::tuple<long long, long long, long long> line_key(const Line& l) {
  const double b = tol().dedup_bucket;
  const double off = cross(l.dir, l.anchor);
  return {llround(l.dir.x / b), llround(l.dir.y / b), llround(off / b)};
}

}  // namespace

std::vector<Line> candidate_lines(const std::vector<ConvexBody>& bodies) {
  // Completeness rests on the standard pivoting argument: a transversal of
  // closed convex polygons can be translated until it supports some body at
  // a vertex, then rotated about that vertex until it reaches a second
  // vertex of the input, remaining a transversal throughout. Hence lines
  // through two distinct input vertices decide existence exactly; lines
  // supporting an edge are vertex pairs of the same body.
  std::vector<Point> pool;
  for (const ConvexBody& b : bodies)
    pool.insert(pool.end(), b.vertices.begin(), b.vertices.end());
  if (pool.empty()) fail(Errc::empty_geometry, "candidate lines of empty body list");
  std::sort(pool.begin(), pool.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
             pool.end());

  std::vector<Line> out;
  if (pool.size() == 1) {
    out.push_back(Line::from_direction(pool[0], {1.0, 0.0}));
    out.push_back(Line::from_direction(pool[0], {0.0, 1.0}));
    return out;
  }
  std::set<std::tuple<long long, long long, long long>> seen;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      if (dist(pool[i], pool[j]) <= tol().sign_eps) continue;
      Line l = Line::through(pool[i], pool[j]);
      if (seen.insert(line_key(l)).second) out.push_back(l);
    }
  return out;
}

std::optional<Line> transversal_exists(const std::vector<ConvexBody>& bodies) {
  if (bodies.empty()) fail(Errc::invalid_argument, "transversal of empty body list");
  for (const Line& l : candidate_lines(bodies)) {
    bool all = true;
    for (const ConvexBody& b : bodies)
      if (!line_intersects_body(l, b)) {
        all = false;
        break;
      }
    if (all) return l;
  }
  return std::nullopt;
}

std::optional<T3Counterexample> find_t3_counterexample(const Instance& in) {
  validate_instance(in);
  const int m = (int)in.families.size();
  int logical[5];
  for (int l = 0; l < 5; ++l) logical[l] = l % m;

  using Key = std::array<std::pair<int, int>, 3>;
  std::set<Key> seen;
  for (int l1 = 0; l1 < 5; ++l1)
    for (int l2 = l1 + 1; l2 < 5; ++l2)
      for (int l3 = l2 + 1; l3 < 5; ++l3) {
        const int f1 = logical[l1], f2 = logical[l2], f3 = logical[l3];
        const auto& b1 = in.families[f1].bodies;
        const auto& b2 = in.families[f2].bodies;
        const auto& b3 = in.families[f3].bodies;
        for (int i = 0; i < (int)b1.size(); ++i)
          for (int j = 0; j < (int)b2.size(); ++j)
            for (int k = 0; k < (int)b3.size(); ++k) {
              Key key{{{f1, i}, {f2, j}, {f3, k}}};
              std::sort(key.begin(), key.end());
              // A triple with a repeated body reduces to two sets, which
              // always admit a transversal.
              if (key[0] == key[1] || key[1] == key[2]) continue;
              if (!seen.insert(key).second) continue;
              if (!transversal_exists({b1[i], b2[j], b3[k]}))
                return T3Counterexample{key};
            }
      }
  return std::nullopt;
}

PierceCheck pierced_by(const std::vector<Line>& lines, const Family& fam) {
  PierceCheck res;
  for (int i = 0; i < (int)fam.bodies.size(); ++i) {
    bool hit = false;
    for (const Line& l : lines)
      if (line_intersects_body(l, fam.bodies[i])) {
        hit = true;
        break;
      }
    if (!hit) res.unpierced.push_back(i);
  }
  res.all_pierced = res.unpierced.empty();
  return res;
}

MinPiercing min_line_piercing(const Family& fam, int k_max) {
  if (k_max < 1 || k_max > 3) fail(Errc::invalid_argument, "k_max must be in 1..3");
  if (fam.bodies.empty()) fail(Errc::invalid_argument, "min piercing of empty family");
  const std::vector<Line> cands = candidate_lines(fam.bodies);
  if (cands.size() > 5000)
    fail(Errc::too_large, "candidate line count " + std::to_string(cands.size()) + " exceeds 5000");

  const int n = (int)fam.bodies.size();
  const int words = (n + 63) / 64;
  using Mask = std::vector<unsigned long long>;
  Mask full(words, 0ull);
  for (int i = 0; i < n; ++i) full[i / 64] |= 1ull << (i % 64);

  // Lines with identical coverage are interchangeable for set cover; keep
  // the earliest representative so the first hit stays the lexicographically
  // smallest index tuple.
  std::vector<Mask> masks;
  std::vector<int> reps;
  std::set<Mask> dedup;
  for (int c = 0; c < (int)cands.size(); ++c) {
    Mask m(words, 0ull);
    for (int i = 0; i < n; ++i)
      if (line_intersects_body(cands[c], fam.bodies[i])) m[i / 64] |= 1ull << (i % 64);
    if (dedup.insert(m).second) {
      masks.push_back(std::move(m));
      reps.push_back(c);
    }
  }
  const auto is_full = [&](const Mask& m) { return m == full; };
  const auto unite = [&](const Mask& a, const Mask& b) {
    Mask r(words);
    for (int w = 0; w < words; ++w) r[w] = a[w] | b[w];
    return r;
  };

  const int nc = (int)masks.size();
  for (int i = 0; i < nc; ++i)
    if (is_full(masks[i])) return {1, {cands[reps[i]]}};
  if (k_max >= 2)
    for (int i = 0; i < nc; ++i)
      for (int j = i + 1; j < nc; ++j)
        if (is_full(unite(masks[i], masks[j]))) return {2, {cands[reps[i]], cands[reps[j]]}};
  if (k_max >= 3)
    for (int i = 0; i < nc; ++i)
      for (int j = i + 1; j < nc; ++j) {
        const Mask ij = unite(masks[i], masks[j]);
        for (int k = j + 1; k < nc; ++k)
          if (is_full(unite(ij, masks[k])))
            return {3, {cands[reps[i]], cands[reps[j]], cands[reps[k]]}};
      }
  return {std::nullopt, {}};
}

}  // namespace pierce
