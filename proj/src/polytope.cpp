#include "thermo/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace thermo {

namespace {

bool series_less(const SwapSeries& a, const SwapSeries& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    const SwapStep &x = a.steps[i], &y = b.steps[i];
    if (x.j != y.j) return x.j < y.j;
    if (x.k != y.k) return x.k < y.k;
    if (x.lam != y.lam) return x.lam < y.lam;
  }
  return false;
}

}  // namespace

bool PointSet::insert(PopulationVector p, std::optional<PointLabel> label) {
  for (int i = 0; i < size(); ++i) {
    if (linf_distance(points[i].probs, p.probs) <= tol::dedup) {
      if (label && labelled() && series_less(label->series, labels[i].series)) {
        labels[i] = std::move(*label);
      }
      return false;
    }
  }
  points.push_back(std::move(p));
  if (label) {
    labels.push_back(std::move(*label));
  } else if (labelled()) {
    throw std::invalid_argument("mixing labelled and unlabelled points");
  }
  return true;
}

MembershipResult hull_membership(const PopulationVector& x, const PointSet& s,
                                 const LpSolver& solver) {
  if (s.size() == 0) throw std::invalid_argument("empty point set");
  const int d = x.dim();
  const int n = s.size();
  LpProblem lp;
  lp.a.assign(d + 1, Vec(n, 0.0));
  lp.b.assign(d + 1, 0.0);
  lp.c.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (s.points[i].dim() != d) throw std::invalid_argument("dimension mismatch");
    for (int r = 0; r < d; ++r) lp.a[r][i] = s.points[i].probs[r];
    lp.a[d][i] = 1.0;
  }
  for (int r = 0; r < d; ++r) lp.b[r] = x.probs[r];
  lp.b[d] = 1.0;
  const LpSolution sol = solver.solve(lp);
  if (sol.status == LpStatus::Infeasible) return {false, {}};
  if (sol.status != LpStatus::Optimal) throw LpError("membership program failed");
  return {true, sol.x};
}

PointSet extremal_filter(const PointSet& s, const LpSolver& solver) {
  if (s.size() == 0) throw std::invalid_argument("empty point set");
  PointSet out;
  if (s.labelled()) out.labels.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) {
    PointSet others;
    for (int j = 0; j < s.size(); ++j) {
      if (j != i) others.points.push_back(s.points[j]);
    }
    bool extremal = true;
    if (!others.points.empty()) {
      try {
        extremal = !hull_membership(s.points[i], others, solver).inside;
      } catch (const LpError& e) {
        throw LpError("extremal_filter failed on point " + std::to_string(i) +
                      ": " + e.what());
      }
    }
    if (extremal) {
      out.points.push_back(s.points[i]);
      if (s.labelled()) out.labels.push_back(s.labels[i]);
    }
  }
  return out;
}

EmbedMap identity_embed(int d) {
  EmbedMap e;
  e.sys_dim = d;
  e.matrix.assign(d, Vec(d, 0.0));
  for (int i = 0; i < d; ++i) e.matrix[i][i] = 1.0;
  return e;
}

MembershipResult slice_membership(const PopulationVector& q, const PointSet& s,
                                  const EmbedMap& embed, const LpSolver& solver) {
  const int ambient = static_cast<int>(embed.matrix.size());
  Vec x(ambient, 0.0);
  for (int r = 0; r < ambient; ++r) {
    for (int a = 0; a < embed.sys_dim; ++a) x[r] += embed.matrix[r][a] * q.probs[a];
  }
  return hull_membership(PopulationVector(std::move(x)), s, solver);
}

namespace {

// Support LP over the slice: maximize u . (x(q), y(q)) with q the system
// coordinates of a point of conv(s) in product form.
std::optional<Vec> slice_support(const PointSet& s, const EmbedMap& embed,
                                 double ux, double uy, const LpSolver& solver) {
  const int ambient = static_cast<int>(embed.matrix.size());
  const int n = s.size();
  const int nq = embed.sys_dim;
  LpProblem lp;
  lp.a.assign(ambient + 1, Vec(n + nq, 0.0));
  lp.b.assign(ambient + 1, 0.0);
  lp.c.assign(n + nq, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < ambient; ++r) lp.a[r][i] = s.points[i].probs[r];
    lp.a[ambient][i] = 1.0;
  }
  for (int a = 0; a < nq; ++a) {
    for (int r = 0; r < ambient; ++r) lp.a[r][n + a] = -embed.matrix[r][a];
  }
  lp.b[ambient] = 1.0;
  // Barycentric plane coordinates of q = (q1,q2,q3).
  lp.c[n + 1] = -(ux * 1.0);
  lp.c[n + 2] = -(ux * 0.5 + uy * std::numbers::sqrt3 / 2.0);
  const LpSolution sol = solver.solve(lp);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;
  if (sol.status != LpStatus::Optimal) throw LpError("slice support program failed");
  return Vec(sol.x.begin() + n, sol.x.end());
}

// Monotone-chain hull of 2D points; near-collinear interior points dropped.
std::vector<int> hull_2d(const std::vector<std::pair<double, double>>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  auto cross = [&](int o, int a, int b) {
    return (pts[a].first - pts[o].first) * (pts[b].second - pts[o].second) -
           (pts[a].second - pts[o].second) * (pts[b].first - pts[o].first);
  };
  std::vector<int> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const size_t lower = hull.size();
    for (int i : idx) {
      while (hull.size() >= lower + 2 &&
             cross(hull[hull.size() - 2], hull.back(), i) <= 1e-8) {
        hull.pop_back();
      }
      hull.push_back(i);
    }
    hull.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  if (hull.empty()) hull.push_back(idx[0]);
  return hull;
}

}  // namespace

PointSet slice_vertices(const PointSet& s, const EmbedMap& embed, int directions,
                        const LpSolver& solver) {
  if (embed.sys_dim != 3) {
    // Directional enumeration is implemented for two intrinsic dimensions;
    // the identity embedding reduces to plain extremality.
    bool ident = embed.sys_dim == static_cast<int>(embed.matrix.size());
    if (ident) {
      for (int r = 0; ident && r < embed.sys_dim; ++r) {
        for (int a = 0; a < embed.sys_dim; ++a) {
          if (std::abs(embed.matrix[r][a] - (r == a ? 1.0 : 0.0)) > 0) ident = false;
        }
      }
    }
    if (ident) return extremal_filter(s, solver);
    throw std::invalid_argument("slice_vertices supports sys_dim == 3");
  }

  struct Candidate {
    double theta;
    Vec q;
  };
  std::vector<Candidate> found;
  auto probe = [&](double theta) -> const Vec& {
    const auto q = slice_support(s, embed, std::cos(theta), std::sin(theta), solver);
    if (!q) throw EmptySliceError("slice region is empty");
    found.push_back({theta, *q});
    return found.back().q;
  };

  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::pair<double, Vec>> ring;
  ring.reserve(directions);
  for (int i = 0; i < directions; ++i) {
    const double theta = two_pi * i / directions;
    ring.emplace_back(theta, probe(theta));
  }
  // Bisect between adjacent directions whose maximizers differ; a vertex of
  // the region sits in every such angular gap.
  for (int i = 0; i < directions; ++i) {
    double lo = ring[i].first;
    double hi = (i + 1 < directions) ? ring[i + 1].first : two_pi;
    Vec qlo = ring[i].second;
    Vec qhi = ring[(i + 1) % directions].second;
    while (hi - lo > 1e-6 && linf_distance(qlo, qhi) > 1e-7) {
      const double mid = 0.5 * (lo + hi);
      const Vec qm = probe(mid);
      if (linf_distance(qm, qlo) <= 1e-7) {
        lo = mid;
        qlo = qm;
      } else {
        hi = mid;
        qhi = qm;
      }
    }
  }

  std::vector<std::pair<double, double>> plane;
  std::vector<PopulationVector> states;
  for (auto& cand : found) {
    // LP basic solutions can carry rounding noise just past the strict
    // population checks; clamp and renormalize before wrapping.
    double total = 0.0;
    for (double& v : cand.q) {
      if (v < 0.0) v = 0.0;
      total += v;
    }
    for (double& v : cand.q) v /= total;
    PopulationVector q(std::move(cand.q));
    plane.push_back(barycentric(q));
    states.push_back(std::move(q));
  }
  PointSet out;
  for (int i : hull_2d(plane)) out.insert(states[i]);
  return out;
}

std::pair<double, double> barycentric(const PopulationVector& p) {
  if (p.dim() != 3) throw std::invalid_argument("barycentric needs d = 3");
  return {p.probs[1] + 0.5 * p.probs[2], std::numbers::sqrt3 / 2.0 * p.probs[2]};
}

}  // namespace thermo
