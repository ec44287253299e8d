#include "thermo/reach.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace thermo {

namespace {

// Quantized coordinate key for the visited-state set. Granularity 1e-9 sits
// safely between the dedup tolerance and typical vertex separations.
std::string state_key(const Vec& v) {
  std::string s(v.size() * sizeof(long long), '\0');
  for (size_t i = 0; i < v.size(); ++i) {
    const long long q = std::llround(v[i] * 1e9);
    std::memcpy(s.data() + i * sizeof(long long), &q, sizeof(long long));
  }
  return s;
}

struct Node {
  PopulationVector state;
  SwapSeries series;
  BetaOrder order;
};

// All admissible single beta-swap successors of a node. Prunes immediate
// swap repetition (the square of a beta-swap is never extremal) and
// non-neighbouring swaps whose output beta-order is not the corresponding
// transposition of the input order (those outputs are never extremal).
// Every generated or pruned state is marked visited.
std::vector<Node> expand(const Node& f, const GibbsContext& ctx,
                         std::unordered_set<std::string>& visited) {
  std::vector<Node> out;
  const int d = ctx.dim();
  const SwapStep* last = f.series.steps.empty() ? nullptr : &f.series.steps.back();
  for (int j = 1; j <= d; ++j) {
    for (int k = j + 1; k <= d; ++k) {
      if (last && ((last->j == j && last->k == k) || (last->j == k && last->k == j))) {
        continue;
      }
      const SwapStep step{j, k, 1.0};
      PopulationVector q = apply_step(step, f.state, ctx);
      const std::string key = state_key(q.probs);
      if (visited.count(key)) continue;
      BetaOrder order_q = beta_order(q, ctx);
      if (!is_neighbouring(step, f.state, ctx) && !has_degenerate_slopes(q, ctx)) {
        std::vector<int> want = f.order.perm;
        int a = -1, b = -1;
        for (int i = 0; i < d; ++i) {
          if (want[i] == j) a = i;
          if (want[i] == k) b = i;
        }
        std::swap(want[a], want[b]);
        if (order_q.perm != want) {
          visited.insert(key);
          continue;
        }
      }
      visited.insert(key);
      SwapSeries s = f.series;
      s.steps.push_back(step);
      out.push_back({std::move(q), std::move(s), std::move(order_q)});
    }
  }
  return out;
}

int longest_series(const PointSet& s) {
  int l = 0;
  for (const PointLabel& lab : s.labels) l = std::max(l, lab.series.length());
  return l;
}

bool point_present(const PointSet& s, const PopulationVector& p) {
  for (const PopulationVector& q : s.points) {
    if (linf_distance(q.probs, p.probs) <= tol::dedup) return true;
  }
  return false;
}

bool curve_dominates(const MajorizationCurve& a, const MajorizationCurve& b) {
  for (const auto& [x, y] : b.elbows) {
    if (evaluate(a, x) < y - tol::maj) return false;
  }
  return true;
}

}  // namespace

std::string method_name(ReachMethod m) {
  switch (m) {
    case ReachMethod::To: return "to";
    case ReachMethod::EtoHull: return "eto-hull";
    case ReachMethod::EtoPrune: return "eto-prune";
    case ReachMethod::EtoQutrit: return "eto-qutrit";
    case ReachMethod::EtoMonotonic: return "eto-mono";
    case ReachMethod::CetoSlice: return "ceto-slice";
  }
  return "?";
}

long long lmax_bound(int d) {
  if (d < 3) throw std::invalid_argument("length bound needs d >= 3");
  if (d == 3) return 3;
  long long fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return (fact - 4) / (d - 3);
}

int default_lmax_cap(int d) {
  return static_cast<int>(std::min<long long>(lmax_bound(d), 3LL * d * d));
}

ReachableSet to_extremal_points(const PopulationVector& p, const GibbsContext& ctx,
                                const LpSolver& solver) {
  const int d = ctx.dim();
  if (d > 8) throw std::invalid_argument("factorial construction capped at d = 8");
  const MajorizationCurve lp_curve = curve(p, ctx);

  PointSet candidates;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Vec q(d, 0.0);
    double x = 0.0, y_prev = 0.0;
    for (int k = 0; k < d; ++k) {
      x += ctx.tau(perm[k]);
      const double y = evaluate(lp_curve, std::min(x, 1.0));
      q[perm[k] - 1] = std::max(0.0, y - y_prev);
      y_prev = y;
    }
    candidates.insert(PopulationVector(std::move(q)),
                      PointLabel{SwapSeries{}, BetaOrder{perm}});
  } while (std::next_permutation(perm.begin(), perm.end()));

  ReachableSet rs;
  rs.method = ReachMethod::To;
  rs.vertices = extremal_filter(candidates, solver);
  rs.lmax_used = 0;
  rs.exhausted = true;
  return rs;
}

ReachableSet eto_extremal_hull(const PopulationVector& p, const GibbsContext& ctx,
                               int lmax_cap, const LpSolver& solver) {
  const int d = ctx.dim();
  if (lmax_cap < 0) lmax_cap = default_lmax_cap(d);

  std::unordered_set<std::string> visited;
  visited.insert(state_key(p.probs));
  Node root{p, SwapSeries{}, beta_order(p, ctx)};
  PointSet current;
  current.insert(root.state, PointLabel{root.series, root.order});
  std::vector<Node> frontier{std::move(root)};

  bool exhausted = false;
  for (int depth = 1; depth <= lmax_cap && !exhausted; ++depth) {
    std::vector<Node> added;
    for (const Node& f : frontier) {
      for (Node& g : expand(f, ctx, visited)) {
        if (current.insert(g.state, PointLabel{g.series, g.order})) {
          added.push_back(std::move(g));
        }
      }
    }
    if (added.empty()) {
      exhausted = true;
      break;
    }
    current = extremal_filter(current, solver);
    frontier.clear();
    for (Node& g : added) {
      if (point_present(current, g.state)) frontier.push_back(std::move(g));
    }
    if (frontier.empty()) exhausted = true;
  }

  ReachableSet rs;
  rs.method = ReachMethod::EtoHull;
  rs.vertices = std::move(current);
  rs.lmax_used = longest_series(rs.vertices);
  // Running to the proven length bound is as good as an empty frontier.
  rs.exhausted = exhausted || lmax_cap >= lmax_bound(d);
  return rs;
}

ReachableSet eto_extremal_prune(const PopulationVector& p, const GibbsContext& ctx,
                                int lmax_cap, bool post_filter,
                                const LpSolver& solver) {
  const int d = ctx.dim();
  if (lmax_cap < 0) lmax_cap = default_lmax_cap(d);

  std::unordered_set<std::string> visited;
  visited.insert(state_key(p.probs));

  std::vector<Node> nodes;
  std::vector<MajorizationCurve> curves;
  std::vector<bool> alive;
  std::map<std::vector<int>, std::vector<int>> by_order;

  auto admit = [&](Node g) -> int {
    MajorizationCurve cg = curve(g.state, ctx);
    std::vector<int>& group = by_order[g.order.perm];
    for (int idx : group) {
      if (alive[idx] && curve_dominates(curves[idx], cg)) return -1;
    }
    for (int idx : group) {
      if (alive[idx] && curve_dominates(cg, curves[idx])) alive[idx] = false;
    }
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(g));
    curves.push_back(std::move(cg));
    alive.push_back(true);
    group.push_back(id);
    return id;
  };

  std::vector<int> frontier;
  frontier.push_back(admit(Node{p, SwapSeries{}, beta_order(p, ctx)}));

  bool exhausted = false;
  for (int depth = 1; depth <= lmax_cap && !exhausted; ++depth) {
    std::vector<int> next;
    for (int fid : frontier) {
      if (fid < 0 || !alive[fid]) continue;
      const Node f = nodes[fid];  // copy: admit() may reallocate nodes
      for (Node& g : expand(f, ctx, visited)) {
        const int id = admit(std::move(g));
        if (id >= 0) next.push_back(id);
      }
    }
    if (next.empty()) {
      exhausted = true;
      break;
    }
    frontier = std::move(next);
  }

  PointSet survivors;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (alive[i]) {
      survivors.insert(nodes[i].state, PointLabel{nodes[i].series, nodes[i].order});
    }
  }

  ReachableSet rs;
  rs.method = ReachMethod::EtoPrune;
  rs.vertices = post_filter ? extremal_filter(survivors, solver) : std::move(survivors);
  rs.lmax_used = longest_series(rs.vertices);
  rs.exhausted = exhausted || lmax_cap >= lmax_bound(d);
  rs.superset = !post_filter;
  return rs;
}

ReachableSet eto_qutrit(const PopulationVector& p, const GibbsContext& ctx,
                        const LpSolver& solver) {
  if (ctx.dim() != 3) throw std::invalid_argument("closed form needs d = 3");
  const BetaOrder pi = beta_order(p, ctx);
  const int a = pi.perm[0], b = pi.perm[1], c = pi.perm[2];

  auto make = [&](std::vector<std::pair<int, int>> pairs) {
    SwapSeries s;
    for (auto [j, k] : pairs) s.steps.push_back({j, k, 1.0});
    PopulationVector q = apply_series(s, p, ctx);
    BetaOrder o = beta_order(q, ctx);
    return Node{std::move(q), std::move(s), std::move(o)};
  };

  // Guaranteed vertices: identity, the two neighbouring swaps, and the two
  // length-2 neighbouring chains ending on the outer pair.
  std::vector<Node> theta;
  theta.push_back(make({}));
  theta.push_back(make({{a, b}}));
  theta.push_back(make({{b, c}}));
  theta.push_back(make({{a, b}, {a, c}}));
  theta.push_back(make({{b, c}, {a, c}}));
  // Candidates that may or may not be extremal.
  std::vector<Node> xi;
  xi.push_back(make({{a, c}}));
  xi.push_back(make({{a, b}, {a, c}, {b, c}}));
  xi.push_back(make({{b, c}, {a, c}, {a, b}}));

  PointSet all;
  for (const Node& n : theta) all.insert(n.state, PointLabel{n.series, n.order});
  for (const Node& n : xi) all.insert(n.state, PointLabel{n.series, n.order});
  PointSet filtered = extremal_filter(all, solver);

  PointSet out;
  for (const Node& n : theta) out.insert(n.state, PointLabel{n.series, n.order});
  for (int i = 0; i < filtered.size(); ++i) {
    out.insert(filtered.points[i], filtered.labels[i]);
  }

  ReachableSet rs;
  rs.method = ReachMethod::EtoQutrit;
  rs.vertices = std::move(out);
  rs.lmax_used = longest_series(rs.vertices);
  rs.exhausted = true;
  return rs;
}

ReachableSet eto_monotonic(const PopulationVector& p, const GibbsContext& ctx) {
  const int d = ctx.dim();
  const BetaOrder pi = beta_order(p, ctx);
  std::vector<int> asc(d), desc(d);
  std::iota(asc.begin(), asc.end(), 1);
  for (int i = 0; i < d; ++i) desc[i] = d - i;
  if (pi.perm != asc && pi.perm != desc) {
    std::string msg = "fast path needs a monotone beta-order, got (";
    for (int i = 0; i < d; ++i) msg += (i ? "," : "") + std::to_string(pi.perm[i]);
    throw std::invalid_argument(msg + ")");
  }

  PointSet out;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    SwapSeries s = standard_formation(pi, BetaOrder{perm});
    PopulationVector q = apply_series(s, p, ctx);
    BetaOrder o = beta_order(q, ctx);
    out.insert(std::move(q), PointLabel{std::move(s), std::move(o)});
  } while (std::next_permutation(perm.begin(), perm.end()));

  ReachableSet rs;
  rs.method = ReachMethod::EtoMonotonic;
  rs.vertices = std::move(out);
  rs.lmax_used = longest_series(rs.vertices);
  rs.exhausted = true;
  return rs;
}

MembershipResult contains(const PopulationVector& target, const ReachableSet& rs,
                          const LpSolver& solver) {
  return hull_membership(target, rs.vertices, solver);
}

}  // namespace thermo
