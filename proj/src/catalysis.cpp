#include "thermo/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermo {

PopulationVector CatalystSpec::state() const {
  if (c1 < -tol::neg || c1 > 1.0 + tol::neg) {
    throw std::invalid_argument("catalyst population outside [0,1]");
  }
  const double x = std::clamp(c1, 0.0, 1.0);
  return PopulationVector({x, 1.0 - x});
}

const GibbsContext& catalyst_context() {
  static const GibbsContext ctx{Hamiltonian({0.0, 0.0})};
  return ctx;
}

std::pair<PopulationVector, GibbsContext> tensor(const PopulationVector& p,
                                                 const CatalystSpec& c,
                                                 const GibbsContext& ctx) {
  const int d = ctx.dim();
  const PopulationVector cs = c.state();
  Vec joint(2 * d), energies(2 * d);
  for (int a = 1; a <= d; ++a) {
    for (int b = 1; b <= 2; ++b) {
      joint[2 * (a - 1) + b - 1] = p[a] * cs[b];
      energies[2 * (a - 1) + b - 1] = ctx.energy(a);
    }
  }
  return {PopulationVector(std::move(joint)), GibbsContext(Hamiltonian(std::move(energies)))};
}

EmbedMap tensor_embed(const CatalystSpec& c, int d_sys) {
  const PopulationVector cs = c.state();
  EmbedMap e;
  e.sys_dim = d_sys;
  e.matrix.assign(2 * d_sys, Vec(d_sys, 0.0));
  for (int a = 0; a < d_sys; ++a) {
    e.matrix[2 * a][a] = cs[1];
    e.matrix[2 * a + 1][a] = cs[2];
  }
  return e;
}

namespace {

std::pair<PointSet, ReachableSet> product_reach(const PopulationVector& p,
                                                const CatalystSpec& c,
                                                const GibbsContext& ctx,
                                                const CetoOptions& opts,
                                                const LpSolver& solver) {
  auto [joint, pctx] = tensor(p, c, ctx);
  ReachableSet rs =
      eto_extremal_prune(joint, pctx, opts.lmax_cap, opts.post_filter, solver);
  return {rs.vertices, std::move(rs)};
}

}  // namespace

ReachableSet ceto_slice(const PopulationVector& p, const CatalystSpec& c,
                        const GibbsContext& ctx, const CetoOptions& opts,
                        const LpSolver& solver) {
  auto [verts, product_rs] = product_reach(p, c, ctx, opts, solver);
  const EmbedMap embed = tensor_embed(c, ctx.dim());
  ReachableSet rs;
  rs.method = ReachMethod::CetoSlice;
  try {
    rs.vertices = slice_vertices(verts, embed, opts.directions, solver);
  } catch (const EmptySliceError&) {
    // p itself always sits in its own slice; emptiness is a numerical fault.
    throw LpError("catalytic slice came back empty");
  }
  rs.lmax_used = product_rs.lmax_used;
  rs.exhausted = product_rs.exhausted;
  rs.superset = false;
  return rs;
}

CetoSweep ceto_sweep(const PopulationVector& p, const GibbsContext& ctx, Vec grid,
                     const CetoOptions& opts, const LpSolver& solver) {
  CetoSweep sw;
  sw.grid = std::move(grid);
  sw.slices.reserve(sw.grid.size());
  sw.product_vertices.reserve(sw.grid.size());
  for (double c1 : sw.grid) {
    const CatalystSpec c{c1};
    auto [verts, product_rs] = product_reach(p, c, ctx, opts, solver);
    const EmbedMap embed = tensor_embed(c, ctx.dim());
    ReachableSet slice;
    slice.method = ReachMethod::CetoSlice;
    slice.vertices = slice_vertices(verts, embed, opts.directions, solver);
    slice.lmax_used = product_rs.lmax_used;
    slice.exhausted = product_rs.exhausted;
    for (const PopulationVector& v : slice.vertices.points) sw.union_points.insert(v);
    sw.slices.push_back(std::move(slice));
    sw.product_vertices.push_back(std::move(verts));
  }
  sw.union_hull = extremal_filter(sw.union_points, solver);
  return sw;
}

bool sweep_union_contains(const CetoSweep& sweep, const PopulationVector& q,
                          const LpSolver& solver) {
  for (size_t i = 0; i < sweep.grid.size(); ++i) {
    const EmbedMap embed = tensor_embed(CatalystSpec{sweep.grid[i]}, q.dim());
    if (slice_membership(q, sweep.product_vertices[i], embed, solver).inside) {
      return true;
    }
  }
  return false;
}

OptimalCatalyst optimal_catalyst_ground_min(const PopulationVector& p,
                                            const GibbsContext& ctx) {
  if (ctx.dim() != 3) throw std::invalid_argument("closed form needs d = 3");
  const double p1 = p[1], p3 = p[3];
  if (p1 <= 0.0) throw std::invalid_argument("formula needs p1 > 0");
  const double d13 = ctx.delta(1, 3);
  const double c1 =
      (-p3 + std::sqrt(p3 * p3 + 8.0 * d13 * p1 * p3)) / (4.0 * d13 * p1);
  const bool applicable = beta_order(p, ctx).perm == std::vector<int>{2, 1, 3};
  return {CatalystSpec{std::clamp(c1, 0.0, 1.0)}, applicable};
}

namespace {

struct Insertion {
  int pos;  // inserted before base step `pos`
  SwapStep step;

  bool operator==(const Insertion&) const = default;
  bool operator<(const Insertion& o) const {
    if (pos != o.pos) return pos < o.pos;
    if (step.j != o.step.j) return step.j < o.step.j;
    return step.k < o.step.k;
  }
};

// Greedy alignment of `base` as a subsequence of `s`; leftover steps become
// insertions. Returns nullopt when base is not a subsequence.
std::optional<std::vector<Insertion>> align(const SwapSeries& base, const SwapSeries& s) {
  std::vector<Insertion> ins;
  int i = 0;
  for (const SwapStep& st : s.steps) {
    if (i < base.length() && st == base.steps[i]) {
      ++i;
    } else {
      ins.push_back({i, st});
    }
  }
  if (i != base.length()) return std::nullopt;
  return ins;
}

SwapSeries with_insert(const SwapSeries& s, int pos, const SwapStep& st) {
  SwapSeries r = s;
  r.steps.insert(r.steps.begin() + pos, st);
  return r;
}

// Right-to-left pass that bubbles every step as far right as disjointness
// allows. Disjoint swap blocks commute exactly, so the channel is unchanged;
// the result delays steps not entangled with later ones, which is the
// conventional reading order for recombined series.
SwapSeries canonical_order(SwapSeries s) {
  const int len = s.length();
  for (int i = len - 1; i >= 0; --i) {
    int at = i;
    while (at + 1 < len) {
      const SwapStep& a = s.steps[at];
      const SwapStep& b = s.steps[at + 1];
      if (a.j == b.j || a.j == b.k || a.k == b.j || a.k == b.k) break;
      std::swap(s.steps[at], s.steps[at + 1]);
      ++at;
    }
  }
  return s;
}

// Least squares min ||sum_a w_a cols_a - rhs||; false on a singular system.
bool least_squares(const std::vector<Vec>& cols, const Vec& rhs, Vec& w) {
  const size_t k = cols.size();
  std::vector<Vec> m(k, Vec(k + 1, 0.0));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) {
      for (size_t i = 0; i < rhs.size(); ++i) m[a][b] += cols[a][i] * cols[b][i];
    }
    for (size_t i = 0; i < rhs.size(); ++i) m[a][k] += cols[a][i] * rhs[i];
  }
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < k; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-12) return false;
    std::swap(m[piv], m[col]);
    for (size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (size_t c = col; c <= k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  w.assign(k, 0.0);
  for (size_t a = 0; a < k; ++a) w[a] = m[a][k] / m[a][a];
  return true;
}

}  // namespace

CatalyticTransition decompose_transition(const PopulationVector& p,
                                         const PopulationVector& q,
                                         const CatalystSpec& c,
                                         const GibbsContext& ctx,
                                         const LpSolver& solver) {
  CatalyticTransition t{p, q, c};
  auto [joint_p, pctx] = tensor(p, c, ctx);
  auto [joint_q, pctx_q] = tensor(q, c, ctx);

  if (linf_distance(joint_p.probs, joint_q.probs) <= tol::cat) {
    t.recombined = true;
    t.support.insert(joint_p, PointLabel{SwapSeries{}, beta_order(joint_p, pctx)});
    t.weights = {1.0};
    return t;
  }

  ReachableSet rs = eto_extremal_prune(joint_p, pctx, -1, true, solver);
  const PointSet& v = rs.vertices;

  // Shortest-series-preferring decomposition: minimize total series length
  // over convex weights reproducing the target joint.
  const int n = v.size();
  const int dd = joint_q.dim();
  LpProblem lp;
  lp.a.assign(dd + 1, Vec(n, 0.0));
  lp.b.assign(dd + 1, 0.0);
  lp.c.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < dd; ++r) lp.a[r][i] = v.points[i].probs[r];
    lp.a[dd][i] = 1.0;
    lp.c[i] = static_cast<double>(v.labels[i].series.length());
  }
  for (int r = 0; r < dd; ++r) lp.b[r] = joint_q.probs[r];
  lp.b[dd] = 1.0;
  const LpSolution sol = solver.solve(lp);
  if (sol.status == LpStatus::Infeasible) {
    throw NotReachableError("target is not reachable with this catalyst");
  }
  if (sol.status != LpStatus::Optimal) throw LpError("decomposition program failed");

  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (sol.x[i] > 1e-12) support.push_back(i);
  }
  double wsum = 0.0;
  for (int i : support) wsum += sol.x[i];
  for (int i : support) {
    t.support.insert(v.points[i], v.labels[i]);
    t.weights.push_back(sol.x[i] / wsum);
  }

  // Recombination: all support series must extend the shortest one by
  // insertions drawn from a common small set; marginal weights of the
  // insertions become the lambdas of partial swaps.
  int base_idx = 0;
  for (size_t i = 1; i < support.size(); ++i) {
    if (v.labels[support[i]].series.length() <
        v.labels[support[base_idx]].series.length()) {
      base_idx = static_cast<int>(i);
    }
  }
  const SwapSeries& base = v.labels[support[base_idx]].series;

  bool ok = support.size() <= 4;
  std::vector<Insertion> all_ins;
  std::vector<std::vector<Insertion>> per_series(support.size());
  for (size_t i = 0; ok && i < support.size(); ++i) {
    auto ins = align(base, v.labels[support[i]].series);
    if (!ins) {
      ok = false;
      break;
    }
    per_series[i] = *ins;
    for (const Insertion& x : *ins) {
      if (std::find(all_ins.begin(), all_ins.end(), x) == all_ins.end()) {
        all_ins.push_back(x);
      }
    }
  }
  if (ok && all_ins.size() > 2) ok = false;
  for (size_t a = 0; ok && a < all_ins.size(); ++a) {
    for (size_t b = a + 1; b < all_ins.size(); ++b) {
      if (all_ins[a].pos == all_ins[b].pos) ok = false;  // order would be ambiguous
    }
  }

  if (ok) {
    std::sort(all_ins.begin(), all_ins.end());
    Vec lam(all_ins.size(), 0.0);
    for (size_t i = 0; i < support.size(); ++i) {
      for (const Insertion& x : per_series[i]) {
        const auto it = std::find(all_ins.begin(), all_ins.end(), x);
        lam[it - all_ins.begin()] += t.weights[i];
      }
    }
    SwapSeries combined = base;
    for (int m = static_cast<int>(all_ins.size()) - 1; m >= 0; --m) {
      SwapStep st = all_ins[m].step;
      st.lam *= lam[m];
      combined.steps.insert(combined.steps.begin() + all_ins[m].pos, st);
    }
    const PopulationVector out = apply_series(combined, joint_p, pctx);
    if (linf_distance(out.probs, joint_q.probs) <= tol::cat) {
      t.recombined = true;
      t.series = canonical_order(std::move(combined));
    }
  }

  if (!t.recombined) {
    // The minimal-length decomposition does not always carry an insertion
    // pattern. Search instead for a base vertex series plus one or two
    // inserted swaps whose inclusion/exclusion corners are all vertices:
    // a partial swap equals (1-lam) id + lam full-swap, so such a series
    // realizes exactly the product-measure mixture over the corners, and the
    // lambdas are the corner-weight marginals.
    const int pd = pctx.dim();
    auto stored = [&](const Vec& x) {
      for (int i = 0; i < n; ++i) {
        if (linf_distance(v.points[i].probs, x) <= 1e-8) return i;
      }
      return -1;
    };
    auto diff = [](const Vec& a, const Vec& b) {
      Vec r(a.size());
      for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
      return r;
    };
    auto accept = [&](const SwapSeries& combined,
                      const std::vector<std::pair<SwapSeries, double>>& corners) {
      const PopulationVector out = apply_series(combined, joint_p, pctx);
      if (linf_distance(out.probs, joint_q.probs) > tol::cat) return false;
      t.support = PointSet{};
      t.weights.clear();
      for (const auto& [s, w] : corners) {
        const PopulationVector cs = apply_series(s, joint_p, pctx);
        t.support.insert(cs, PointLabel{s, beta_order(cs, pctx)});
        t.weights.push_back(w);
      }
      t.series = canonical_order(combined);
      t.recombined = true;
      return true;
    };

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return v.labels[a].series.length() < v.labels[b].series.length();
    });

    for (int oi = 0; oi < n && !t.recombined; ++oi) {
      const SwapSeries& s0 = v.labels[order[oi]].series;
      const Vec& c00 = v.points[order[oi]].probs;
      const int len = s0.length();

      struct Candidate {
        int pos;
        SwapStep step;
        SwapSeries series;
        Vec state;
      };
      std::vector<Candidate> singles;
      for (int pos = 0; pos <= len; ++pos) {
        for (int j = 1; j <= pd; ++j) {
          for (int k = j + 1; k <= pd; ++k) {
            const SwapStep st{j, k, 1.0};
            SwapSeries s = with_insert(s0, pos, st);
            Vec c10 = apply_series(s, joint_p, pctx).probs;
            if (stored(c10) < 0 || linf_distance(c10, c00) <= tol::dedup) continue;
            singles.push_back({pos, st, std::move(s), std::move(c10)});
          }
        }
      }

      for (const Candidate& a : singles) {
        Vec w;
        if (!least_squares({diff(a.state, c00)}, diff(joint_q.probs, c00), w)) continue;
        if (w[0] < -1e-9 || w[0] > 1.0 + 1e-9) continue;
        const double lam = std::clamp(w[0], 0.0, 1.0);
        SwapStep st = a.step;
        st.lam = lam;
        if (accept(with_insert(s0, a.pos, st), {{s0, 1.0 - lam}, {a.series, lam}})) break;
      }
      if (t.recombined) break;

      for (const Candidate& a : singles) {
        for (int posb = 0; posb <= len + 1 && !t.recombined; ++posb) {
          for (int j = 1; j <= pd && !t.recombined; ++j) {
            for (int k = j + 1; k <= pd; ++k) {
              const SwapStep stb{j, k, 1.0};
              const SwapSeries sab = with_insert(a.series, posb, stb);
              const Vec c11 = apply_series(sab, joint_p, pctx).probs;
              if (stored(c11) < 0) continue;
              const int posb_base = posb > a.pos ? posb - 1 : posb;
              const SwapSeries sb = with_insert(s0, posb_base, stb);
              const Vec c01 = apply_series(sb, joint_p, pctx).probs;
              if (stored(c01) < 0) continue;
              // Product-measure weights over the four corners make the
              // endpoint bilinear in (la, lb); the corners may be affinely
              // dependent, so solve the bilinear system directly by
              // alternating one-dimensional least squares.
              const Vec u1 = diff(a.state, c00), u2 = diff(c01, c00),
                        u3 = diff(c11, c00), r = diff(joint_q.probs, c00);
              const size_t dd2 = r.size();
              Vec u12(dd2);
              for (size_t i = 0; i < dd2; ++i) u12[i] = u3[i] - u1[i] - u2[i];
              auto fit = [&](const Vec& base, const Vec& dir, double other) {
                double num = 0.0, den = 0.0;
                for (size_t i = 0; i < dd2; ++i) {
                  const double d2 = dir[i] + other * u12[i];
                  num += (r[i] - other * base[i]) * d2;
                  den += d2 * d2;
                }
                return den < 1e-15 ? -1.0 : std::clamp(num / den, 0.0, 1.0);
              };
              double la = 0.0, lb = 0.0;
              bool fine = true;
              for (int it = 0; it < 200 && fine; ++it) {
                const double na = fit(u2, u1, lb);
                if (na < 0.0) { fine = false; break; }
                la = na;
                const double nb = fit(u1, u2, la);
                if (nb < 0.0) { fine = false; break; }
                lb = nb;
              }
              if (!fine) continue;
              double res = 0.0;
              for (size_t i = 0; i < dd2; ++i) {
                res = std::max(res, std::abs(la * u1[i] + lb * u2[i] +
                                             la * lb * u12[i] - r[i]));
              }
              if (res > tol::cat) continue;
              SwapStep sta = a.step, stbl = stb;
              sta.lam = la;
              stbl.lam = lb;
              const SwapSeries combined =
                  with_insert(with_insert(s0, a.pos, sta), posb, stbl);
              if (accept(combined, {{s0, (1.0 - la) * (1.0 - lb)},
                                    {a.series, la * (1.0 - lb)},
                                    {sb, (1.0 - la) * lb},
                                    {sab, la * lb}})) {
                break;
              }
            }
          }
        }
        if (t.recombined) break;
      }
    }
  }
  return t;
}

Trajectory track(const CatalyticTransition& t, const GibbsContext& ctx) {
  if (!t.recombined) {
    throw std::invalid_argument("transition has no recombined series to track");
  }
  auto [joint, pctx] = tensor(t.initial, t.catalyst, ctx);
  const GibbsContext& cctx = catalyst_context();
  const int d = ctx.dim();

  Trajectory traj;
  PopulationVector prev_sys = system_marginal(joint, d, 2);
  auto record = [&](std::optional<SwapStep> step, const PopulationVector& j) {
    const PopulationVector ms = system_marginal(j, d, 2);
    const PopulationVector mc = catalyst_marginal(j, d, 2);
    TrajectoryEntry e{std::move(step),
                      j,
                      nonequilibrium_free_energy(ms, ctx),
                      nonequilibrium_free_energy(mc, cctx),
                      nonequilibrium_free_energy(j, pctx),
                      mutual_information(j, d, 2),
                      linf_distance(ms.probs, prev_sys.probs) <= tol::cat};
    prev_sys = ms;
    traj.entries.push_back(std::move(e));
  };

  record(std::nullopt, joint);
  traj.entries.front().system_unchanged = false;
  for (int i = 0; i < t.series.length(); ++i) {
    joint = apply_step(t.series.steps[i], joint, pctx);
    record(t.series.steps[i], joint);
    const double before = traj.entries[i].f_total;
    const double after = traj.entries[i + 1].f_total;
    if (after > before + 1e-9) {
      throw std::runtime_error("total free energy increased at step " +
                               std::to_string(i + 1));
    }
  }

  const TrajectoryEntry& last = traj.entries.back();
  if (last.mutual_info > 1e-9) {
    throw std::runtime_error("residual system-catalyst correlation after the series");
  }
  const PopulationVector mc = catalyst_marginal(last.joint, d, 2);
  if (linf_distance(mc.probs, t.catalyst.state().probs) > tol::cat) {
    throw std::runtime_error("catalyst marginal not restored");
  }
  return traj;
}

}  // namespace thermo
