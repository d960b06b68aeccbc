#include "core/kkm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "core/errors.hpp"

namespace pierce::kkm {

namespace {

long long vertex_count(int n, int k) {
  // C(k+n-1, n-1), exact at every step of the running product.
  long long r = 1;
  for (int i = 1; i <= n - 1; ++i) {
    r = r * (k + i) / i;
    if (r > 100000000) return r;
  }
  return r;
}

void enumerate_multis(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == n - 1) {
    int s = std::accumulate(cur.begin(), cur.end(), 0);
    cur.push_back(k - s);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  int s = std::accumulate(cur.begin(), cur.end(), 0);
  for (int v = 0; v <= k - s; ++v) {
    cur.push_back(v);
    enumerate_multis(n, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BaryPoint> grid_vertices(int n, int k) {
  if (n < 2 || n > 8) fail(Errc::invalid_argument, "simplex dimension out of range (n must be 2..8)");
  if (k < 1) fail(Errc::invalid_argument, "grid resolution must be at least 1");
  if (vertex_count(n, k) > 10000000) fail(Errc::too_large, "triangulation vertex count exceeds 1e7");
  std::vector<std::vector<int>> multis;
  std::vector<int> cur;
  enumerate_multis(n, k, cur, multis);
  std::vector<BaryPoint> verts;
  verts.reserve(multis.size());
  for (const auto& m : multis) {
    BaryPoint p(n);
    for (int i = 0; i < n; ++i) p[i] = (double)m[i] / k;
    verts.push_back(std::move(p));
  }
  return verts;
}

Triangulation triangulate(int n, int k) {
  if (n < 2 || n > 8) fail(Errc::invalid_argument, "simplex dimension out of range (n must be 2..8)");
  if (k < 1) fail(Errc::invalid_argument, "grid resolution must be at least 1");
  if (vertex_count(n, k) > 10000000) fail(Errc::too_large, "triangulation vertex count exceeds 1e7");

  Triangulation tri;
  tri.n = n;
  tri.k = k;
  std::vector<int> cur;
  enumerate_multis(n, k, cur, tri.vertex_multi);
  std::map<std::vector<int>, int> index;
  tri.vertices.reserve(tri.vertex_multi.size());
  for (int i = 0; i < (int)tri.vertex_multi.size(); ++i) {
    index[tri.vertex_multi[i]] = i;
    BaryPoint p(n);
    for (int j = 0; j < n; ++j) p[j] = (double)tri.vertex_multi[i][j] / k;
    tri.vertices.push_back(std::move(p));
  }

  // Cells come from the Kuhn triangulation of the monotone image
  // 0 <= w_1 <= ... <= w_{n-1} <= k of the simplex: pick an integer base w
  // and walk one unit step per axis in permutation order, keeping only
  // chains whose vertices stay monotone.
  const int d = n - 1;
  const auto monotone = [&](const std::vector<int>& w) {
    for (int i = 0; i + 1 < d; ++i)
      if (w[i] > w[i + 1]) return false;
    return w[d - 1] <= k;
  };
  const auto w_to_multi = [&](const std::vector<int>& w) {
    std::vector<int> m(n);
    m[0] = w[0];
    for (int i = 1; i < d; ++i) m[i] = w[i] - w[i - 1];
    m[d] = k - w[d - 1];
    return m;
  };

  std::vector<int> base(d, 0);
  std::vector<int> perm(d);
  while (true) {
    if (monotone(base)) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> w = base;
        std::vector<int> cell;
        cell.reserve(n);
        cell.push_back(index.at(w_to_multi(w)));
        bool ok = true;
        for (int step = 0; step < d; ++step) {
          ++w[perm[step]];
          if (!monotone(w)) {
            ok = false;
            break;
          }
          cell.push_back(index.at(w_to_multi(w)));
        }
        if (ok) tri.cells.push_back(std::move(cell));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // next base in lexicographic order over [0, k-1]^d
    int pos = d - 1;
    while (pos >= 0 && base[pos] == k - 1) base[pos--] = 0;
    if (pos < 0) break;
    ++base[pos];
  }

  long long expect = 1;
  for (int i = 0; i < d; ++i) expect *= k;
  if ((long long)tri.cells.size() != expect)
    fail(Errc::internal, "Kuhn cell count mismatch");
  return tri;
}

namespace {

using Mask = unsigned;

struct SubGrid {
  // Standard triangulation of a reference simplex, reused for refinement.
  Triangulation tri;
  explicit SubGrid(int n) : tri(triangulate(n, 4)) {}
  BaryPoint map(const std::vector<BaryPoint>& corners, int vtx) const {
    const int n = tri.n;
    BaryPoint x(n, 0.0);
    for (int j = 0; j < n; ++j) {
      const double w = tri.vertices[vtx][j];
      for (int c = 0; c < n; ++c) x[c] += w * corners[j][c];
    }
    return x;
  }
};

int popcount(Mask m) { return __builtin_popcount(m); }

// Maximum bipartite matching (coverings -> colors) by augmenting paths.
int max_matching(const std::vector<Mask>& want, int n, std::vector<int>& color_of) {
  std::vector<int> owner(n, -1);
  std::function<bool(int, Mask&)> tryk = [&](int i, Mask& visited) {
    for (int c = 0; c < n; ++c) {
      if (!((want[i] >> c) & 1u) || ((visited >> c) & 1u)) continue;
      visited |= 1u << c;
      if (owner[c] < 0 || tryk(owner[c], visited)) {
        owner[c] = i;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int i = 0; i < n; ++i) {
    Mask visited = 0;
    if (tryk(i, visited)) ++size;
  }
  color_of.assign(n, -1);
  for (int c = 0; c < n; ++c)
    if (owner[c] >= 0) color_of[owner[c]] = c;
  return size;
}

}  // namespace

IntersectionResult kkm_intersection_search(const CoverOracle& oracle, int n, int k,
                                           int refine_rounds, long long max_evals) {
  IntersectionResult res;
  const Mask all = (1u << n) - 1u;
  const Triangulation tri = triangulate(n, k);

  const auto memberships = [&](const BaryPoint& x) {
    Mask m = 0;
    for (int c = 0; c < n; ++c) {
      ++res.diag.evaluations;
      if (oracle(c, x)) m |= 1u << c;
    }
    return m;
  };

  std::vector<Mask> vm(tri.vertices.size(), 0);
  for (int i = 0; i < (int)tri.vertices.size(); ++i) {
    vm[i] = memberships(tri.vertices[i]);
    if (vm[i] == all) {
      res.point = tri.vertices[i];
      return res;
    }
    Mask support = 0;
    for (int c = 0; c < n; ++c)
      if (tri.vertex_multi[i][c] > 0) support |= 1u << c;
    if ((vm[i] & support) == 0) ++res.diag.face_violations;
  }
  if (res.diag.face_violations > 0)
    res.diag.note = std::to_string(res.diag.face_violations) +
                    " grid vertices violate the face condition";

  // Best cell by distinct colors over its vertices, first index wins.
  int best_cell = -1;
  for (int c = 0; c < (int)tri.cells.size(); ++c) {
    Mask u = 0;
    for (int v : tri.cells[c]) u |= vm[v];
    if (popcount(u) > res.diag.best_coverage) {
      res.diag.best_coverage = popcount(u);
      best_cell = c;
    }
  }
  if (best_cell < 0) return res;

  std::vector<BaryPoint> corners;
  for (int v : tri.cells[best_cell]) corners.push_back(tri.vertices[v]);
  const SubGrid sub(n);
  for (int round = 0; round < refine_rounds; ++round) {
    res.diag.rounds_used = round + 1;
    if (res.diag.evaluations > max_evals) {
      res.diag.note += (res.diag.note.empty() ? "" : "; ") + std::string("evaluation budget hit");
      return res;
    }
    std::vector<Mask> sm(sub.tri.vertices.size(), 0);
    std::vector<BaryPoint> pts(sub.tri.vertices.size());
    for (int i = 0; i < (int)sub.tri.vertices.size(); ++i) {
      pts[i] = sub.map(corners, i);
      sm[i] = memberships(pts[i]);
      if (sm[i] == all) {
        res.point = pts[i];
        return res;
      }
    }
    int best = -1;
    int cover = -1;
    for (int c = 0; c < (int)sub.tri.cells.size(); ++c) {
      Mask u = 0;
      for (int v : sub.tri.cells[c]) u |= sm[v];
      if (popcount(u) > cover) {
        cover = popcount(u);
        best = c;
      }
    }
    res.diag.best_coverage = std::max(res.diag.best_coverage, cover);
    std::vector<BaryPoint> next;
    for (int v : sub.tri.cells[best]) next.push_back(pts[v]);
    corners = std::move(next);
  }
  if (res.diag.note.empty())
    res.diag.note = "no fully colored point at the available resolution";
  return res;
}

RainbowResult colorful_rainbow_search(const std::vector<CoverOracle>& oracles, int n, int k,
                                      int refine_rounds, long long max_evals) {
  if ((int)oracles.size() != n) fail(Errc::invalid_argument, "need exactly n coverings");
  RainbowResult res;
  const Triangulation tri = triangulate(n, k);

  const auto memberships = [&](const BaryPoint& x) {
    std::vector<Mask> want(n, 0);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) {
        ++res.diag.evaluations;
        if (oracles[i](c, x)) want[i] |= 1u << c;
      }
    return want;
  };

  const auto try_point = [&](const BaryPoint& x) {
    const std::vector<Mask> want = memberships(x);
    std::vector<int> color_of;
    const int size = max_matching(want, n, color_of);
    res.diag.best_coverage = std::max(res.diag.best_coverage, size);
    if (size == n) {
      res.point = x;
      res.permutation = color_of;
      return true;
    }
    return false;
  };

  std::vector<std::vector<Mask>> vw(tri.vertices.size());
  for (int i = 0; i < (int)tri.vertices.size(); ++i) {
    vw[i] = memberships(tri.vertices[i]);
    std::vector<int> color_of;
    const int size = max_matching(vw[i], n, color_of);
    if (size > res.diag.best_coverage) res.diag.best_coverage = size;
    if (size == n) {
      res.point = tri.vertices[i];
      res.permutation = color_of;
      return res;
    }
  }

  // Refine around the cell whose per-covering unions admit the largest
  // matching; the union can only shrink under refinement, so this is the
  // upper bound to chase.
  int best_cell = -1, best_size = -1;
  for (int c = 0; c < (int)tri.cells.size(); ++c) {
    std::vector<Mask> u(n, 0);
    for (int v : tri.cells[c])
      for (int i = 0; i < n; ++i) u[i] |= vw[v][i];
    std::vector<int> tmp;
    const int size = max_matching(u, n, tmp);
    if (size > best_size) {
      best_size = size;
      best_cell = c;
    }
  }
  if (best_cell < 0) return res;

  std::vector<BaryPoint> corners;
  for (int v : tri.cells[best_cell]) corners.push_back(tri.vertices[v]);
  const SubGrid sub(n);
  for (int round = 0; round < refine_rounds; ++round) {
    res.diag.rounds_used = round + 1;
    if (res.diag.evaluations > max_evals) {
      res.diag.note = "evaluation budget hit";
      return res;
    }
    std::vector<std::vector<Mask>> sm(sub.tri.vertices.size());
    std::vector<BaryPoint> pts(sub.tri.vertices.size());
    for (int i = 0; i < (int)sub.tri.vertices.size(); ++i) {
      pts[i] = sub.map(corners, i);
      sm[i] = memberships(pts[i]);
      std::vector<int> color_of;
      if (max_matching(sm[i], n, color_of) == n) {
        res.point = pts[i];
        res.permutation = color_of;
        res.diag.best_coverage = n;
        return res;
      }
    }
    int best = -1, size_best = -1;
    for (int c = 0; c < (int)sub.tri.cells.size(); ++c) {
      std::vector<Mask> u(n, 0);
      for (int v : sub.tri.cells[c])
        for (int i = 0; i < n; ++i) u[i] |= sm[v][i];
      std::vector<int> tmp;
      const int size = max_matching(u, n, tmp);
      if (size > size_best) {
        size_best = size;
        best = c;
      }
    }
    res.diag.best_coverage = std::max(res.diag.best_coverage, size_best);
    std::vector<BaryPoint> next;
    for (int v : sub.tri.cells[best]) next.push_back(pts[v]);
    corners = std::move(next);
  }
  res.diag.note = "no rainbow point at the available resolution";
  return res;
}

}  // namespace pierce::kkm
