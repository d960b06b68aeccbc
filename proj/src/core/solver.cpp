#include "core/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "core/errors.hpp"
#include "core/kkm.hpp"

namespace pierce {

namespace {

struct FamilyEval {
  double viol = 0.0;
  double resid = 0.0;
};

// Per-body distance to the nearest of the three lines, with the closed
// zero band folded in so residual 0 coincides with exact piercing.
FamilyEval eval_family(const LineTriple& t, const Family& fam, double delta) {
  FamilyEval e;
  const Line* lines[3] = {&t.l1, &t.l2, &t.l3};
  for (const ConvexBody& b : fam.bodies) {
    double d = std::numeric_limits<double>::infinity();
    for (const Line* l : lines) {
      double dl = distance_body_to_line(b, *l);
      if (dl <= tol().sign_eps) dl = 0.0;
      d = std::min(d, dl);
      if (d == 0.0) break;
    }
    e.resid = std::max(e.resid, d);
    e.viol = std::max(e.viol, std::max(0.0, d - delta));
  }
  return e;
}

struct Score {
  double viol = std::numeric_limits<double>::infinity();
  double resid = std::numeric_limits<double>::infinity();
  int family = -1;

  bool better_than(const Score& o) const {
    if (viol != o.viol) return viol < o.viol;
    return resid < o.resid;
  }
};

// Evaluates all families at one simplex point; the family index is the
// first one attaining the best (violation, residual) pair.
Score score_point(const SimplexPoint& x, const std::vector<Family>& fams, double delta,
                  LineTriple* out_triple = nullptr) {
  const LineTriple t = line_triple(x);
  Score s;
  for (int j = 0; j < (int)fams.size(); ++j) {
    const FamilyEval e = eval_family(t, fams[j], delta);
    Score cand{e.viol, e.resid, j};
    if (cand.better_than(s)) s = cand;
    if (s.resid == 0.0) break;  // first family with an exact pierce wins
  }
  if (out_triple) *out_triple = t;
  return s;
}

int thread_count(const SolveParams& p) {
  if (p.threads > 0) return p.threads;
  if (const char* env = std::getenv("PIERCE3_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

struct BestPoint {
  Score score;
  SimplexPoint x;
  long long index = -1;
};

// Deterministic scan: chunk minima merged in chunk order, so the result is
// independent of the number of threads.
BestPoint scan_points(const std::vector<SimplexPoint>& pts, const std::vector<Family>& fams,
                      double delta, int threads) {
  const long long n = (long long)pts.size();
  const int t = std::max(1, std::min<long long>(threads, n));
  std::vector<BestPoint> local((size_t)t);
  const auto work = [&](int ti) {
    const long long lo = n * ti / t, hi = n * (ti + 1) / t;
    BestPoint best;
    for (long long i = lo; i < hi; ++i) {
      const Score s = score_point(pts[(size_t)i], fams, delta);
      if (best.index < 0 || s.better_than(best.score)) {
        best = {s, pts[(size_t)i], i};
        if (s.resid == 0.0) break;  // nothing in this chunk can beat an exact hit
      }
    }
    local[(size_t)ti] = best;
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int ti = 0; ti < t; ++ti) pool.emplace_back(work, ti);
    for (auto& th : pool) th.join();
  }
  BestPoint best;
  for (const BestPoint& b : local) {
    if (b.index < 0) continue;
    // Exact hits are ordered by scan index; other scores by quality.
    if (best.index < 0) {
      best = b;
    } else if (best.score.resid == 0.0) {
      if (b.score.resid == 0.0 && b.index < best.index) best = b;
    } else if (b.score.resid == 0.0 || b.score.better_than(best.score)) {
      best = b;
    }
  }
  return best;
}

std::array<double, 5> eps_corner(int i, double eps) {
  std::array<double, 5> c{eps, eps, eps, eps, eps};
  c[i] = 1.0 - 4.0 * eps;
  return c;
}

SimplexPoint map_to_eps_simplex(const kkm::BaryPoint& y, double eps) {
  std::array<double, 5> c;
  for (int i = 0; i < 5; ++i) c[i] = eps + (1.0 - 5.0 * eps) * y[i];
  return SimplexPoint::constrained(c, eps);
}

}  // namespace

double violation(const SimplexPoint& x, const Family& fam, double delta) {
  return eval_family(line_triple(x), fam, delta).viol;
}

PiercingResult solve_colorful(const Instance& in, const SolveParams& params) {
  validate_instance(in);
  if (!(params.delta0 > params.delta_min) || !(params.delta_min > 0.0))
    fail(Errc::invalid_argument, "need delta0 > delta_min > 0");
  if (!(params.shrink > 0.0) || !(params.shrink < 1.0))
    fail(Errc::invalid_argument, "shrink factor must be in (0,1)");
  if (params.grid_k < 2 || params.refine_rounds < 0)
    fail(Errc::invalid_argument, "bad grid parameters");
  Epsilon::from_delta(params.delta0);  // validates 5*eps < 1

  if (!params.skip_t3) {
    if (const auto ce = find_t3_counterexample(in)) {
      std::ostringstream os;
      os << "T(3) violated by triple";
      for (const auto& [f, b] : ce->members) os << " (family " << f + 1 << ", body " << b + 1 << ")";
      fail(Errc::t3_violated, os.str());
    }
  }

  auto [norm_in, sim] = params.anchor ? anchored_normalize(in, *params.anchor)
                                      : normalize_instance(in);
  const std::vector<Family>& fams = norm_in.families;
  const int threads = thread_count(params);

  const std::vector<kkm::BaryPoint> grid = kkm::grid_vertices(5, params.grid_k);
  const kkm::Triangulation sub = kkm::triangulate(5, 6);

  std::vector<TraceEntry> trace;
  std::vector<double> viol_curve;
  long long evals = 0;
  std::optional<SimplexPoint> warm;

  std::vector<double> schedule;
  for (double d = params.delta0; d >= params.delta_min; d *= params.shrink) schedule.push_back(d);
  if (schedule.empty()) schedule.push_back(params.delta0);

  const auto budget_left = [&]() { return evals <= params.budget; };
  const auto budget_error = [&]() -> void {
    std::ostringstream os;
    os << "evaluation budget exhausted after " << evals << " evaluations;";
    os << " best violation per delta:";
    for (size_t i = 0; i < viol_curve.size(); ++i)
      os << " " << schedule[i] << "->" << viol_curve[i];
    fail(Errc::budget_exhausted, os.str());
  };

  const auto finish = [&](const SimplexPoint& x, int fam_idx, double viol_at,
                          double delta) -> PiercingResult {
    const LineTriple t = line_triple(x);
    TraceEntry te;
    te.delta = delta;
    te.m = t.m;
    te.p = {t.m + t.l1.dir, t.m + t.l2.dir, t.m + t.l3.dir};
    te.violation = viol_at;
    trace.push_back(te);

    PiercingResult r;
    r.family_index = fam_idx;
    r.family_name = fams[fam_idx].name;
    r.x = x;
    r.triple_normalized = t;
    r.normalization = sim;
    r.lines = {sim.invert(t.l1), sim.invert(t.l2), sim.invert(t.l3)};
    r.m = sim.invert(t.m);
    r.trace = trace;
    r.evaluations = evals;

    // Concurrency must survive the mapping back to original coordinates.
    const double conc_tol = 1e-9 * std::max(1.0, 1.0 / sim.scale);
    for (const Line& l : r.lines)
      if (std::abs(signed_distance(l, r.m)) > conc_tol)
        fail(Errc::internal, "concurrency lost during de-normalization");

    // Residual recomputed against the original bodies with a scale-aware
    // closed band; the exact re-verification below is the hard gate.
    const double eps_orig = tol().sign_eps * std::max(1.0, 1.0 / sim.scale);
    double resid = 0.0;
    const Family& orig = in.families[fam_idx % (int)in.families.size()];
    for (const ConvexBody& b : orig.bodies) {
      double d = std::numeric_limits<double>::infinity();
      for (const Line& l : r.lines) {
        if (line_intersects_body(l, b, eps_orig)) {
          d = 0.0;
          break;
        }
        d = std::min(d, distance_body_to_line(b, l));
      }
      resid = std::max(resid, d);
    }
    r.residual = resid;

    const double norm_resid = eval_family(t, fams[fam_idx], 0.0).resid;
    if (norm_resid == 0.0 && resid > 0.0)
      fail(Errc::internal, "exact piercing did not survive de-normalization");
    if (resid > 0.0 && resid > delta / sim.scale + tol().geom_eps)
      fail(Errc::internal, "returned residual exceeds the delta floor");
    return r;
  };

  for (size_t si = 0; si < schedule.size(); ++si) {
    const double delta = schedule[si];
    const double eps = Epsilon::from_delta(delta).eps;

    std::vector<SimplexPoint> pts;
    pts.reserve(grid.size() + 1);
    if (warm) pts.push_back(*warm);  // previous solution leads the scan
    for (const kkm::BaryPoint& y : grid) pts.push_back(map_to_eps_simplex(y, eps));
    evals += (long long)pts.size() * (long long)fams.size();
    BestPoint best = scan_points(pts, fams, delta, threads);
    if (best.score.resid == 0.0)
      return finish(best.x, best.score.family, best.score.viol, delta);
    if (!budget_left()) {
      viol_curve.push_back(best.score.viol);
      budget_error();
    }

    // Local refinement: shrink a sub-simplex around the incumbent and rescan.
    // A second pass from the runner-up grid cell guards against a bad basin.
    const int starts = best.score.viol > 0.0 ? 3 : 1;
    std::vector<BestPoint> seeds(1, best);
    if (starts > 1) {
      // Runner-up seeds: best grid points not sharing the incumbent's index.
      std::vector<std::pair<Score, long long>> ranked;
      for (long long i = 0; i < (long long)pts.size(); ++i) {
        const Score s = score_point(pts[(size_t)i], fams, delta);
        ranked.push_back({s, i});
      }
      evals += (long long)pts.size() * (long long)fams.size();
      std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.first.better_than(b.first);
      });
      for (const auto& [s, i] : ranked) {
        if ((int)seeds.size() >= starts) break;
        if (i == best.index) continue;
        seeds.push_back({s, pts[(size_t)i], i});
      }
    }

    BestPoint incumbent = best;
    for (const BestPoint& seed : seeds) {
      SimplexPoint z = seed.x;
      Score zs = seed.score;
      double h = 2.0 / params.grid_k;
      for (int round = 0; round < params.refine_rounds; ++round) {
        std::vector<SimplexPoint> local;
        local.reserve(sub.vertices.size());
        std::array<std::array<double, 5>, 5> corners;
        for (int i = 0; i < 5; ++i) {
          const std::array<double, 5> e = eps_corner(i, eps);
          for (int c = 0; c < 5; ++c) corners[i][c] = z[c] + h * (e[c] - z[c]);
        }
        for (const kkm::BaryPoint& w : sub.vertices) {
          std::array<double, 5> cc{};
          for (int i = 0; i < 5; ++i)
            for (int c = 0; c < 5; ++c) cc[c] += w[i] * corners[i][c];
          local.push_back(SimplexPoint::constrained(cc, eps - 1e-12));
        }
        evals += (long long)local.size() * (long long)fams.size();
        const BestPoint lb = scan_points(local, fams, delta, threads);
        if (lb.index >= 0 && lb.score.better_than(zs)) {
          z = lb.x;
          zs = lb.score;
        }
        if (zs.resid == 0.0) return finish(z, zs.family, zs.viol, delta);
        if (!budget_left()) {
          viol_curve.push_back(zs.viol);
          budget_error();
        }
        h *= 0.5;
      }
      if (zs.better_than(incumbent.score)) incumbent = {zs, z, seed.index};
    }

    viol_curve.push_back(incumbent.score.viol);
    {
      const LineTriple t = line_triple(incumbent.x);
      TraceEntry te;
      te.delta = delta;
      te.m = t.m;
      te.p = {t.m + t.l1.dir, t.m + t.l2.dir, t.m + t.l3.dir};
      te.violation = incumbent.score.viol;
      trace.push_back(te);
    }

    if (incumbent.score.viol > 0.0) {
      std::ostringstream os;
      os << "could not pierce the thickened instance at delta " << delta
         << " (best violation " << incumbent.score.viol
         << "); resolution starvation or a hypothesis violation upstream";
      fail(Errc::budget_exhausted, os.str());
    }
    warm = incumbent.x;

    if (si + 1 == schedule.size()) {
      // Schedule exhausted with the thickened family pierced at delta_min:
      // return the near-exact certificate with its honest residual.
      trace.pop_back();
      return finish(incumbent.x, incumbent.score.family, incumbent.score.viol, delta);
    }
  }
  fail(Errc::internal, "unreachable solve path");
}

PiercingResult solve_single(const Family& fam, const SolveParams& params) {
  Instance in;
  for (int i = 0; i < 5; ++i) in.families.push_back(fam);
  PiercingResult r = solve_colorful(in, params);
  r.family_index = 0;
  r.family_name = fam.name;
  return r;
}

PiercingResult solve_anchored(const Instance& in, Point q, SolveParams params) {
  params.anchor = q;
  PiercingResult r = solve_colorful(in, params);
  if (std::abs(signed_distance(r.lines[1], q)) > 1e-9 * std::max(1.0, norm(q)))
    fail(Errc::internal, "anchored solve: l2 missed the anchor point");
  return r;
}

}  // namespace pierce
