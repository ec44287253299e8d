// Command-line front end: curves, beta-orders, reachable sets, catalytic
// slices and transitions, swap trajectories, built-in property checks, and
// random instance emission. All outputs are JSON or CSV.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "thermo/catalysis.hpp"
#include "thermo/io.hpp"
#include "thermo/sampling.hpp"

namespace {

using namespace thermo;
using thermo::io::json;

struct CommonInputs {
  std::string context_path;
  std::string state_path;
};

GibbsContext load_context(const std::string& path) {
  return io::context_from_json(json::parse(io::read_file(path)));
}

PopulationVector load_state(const std::string& path) {
  return io::state_from_json(json::parse(io::read_file(path)));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

ReachMethod parse_method(const std::string& m) {
  if (m == "to") return ReachMethod::To;
  if (m == "eto-hull") return ReachMethod::EtoHull;
  if (m == "eto-prune") return ReachMethod::EtoPrune;
  if (m == "eto-qutrit") return ReachMethod::EtoQutrit;
  if (m == "eto-mono") return ReachMethod::EtoMonotonic;
  throw CLI::ValidationError("--method", "unknown method " + m);
}

ReachableSet run_reach(ReachMethod m, const PopulationVector& p,
                       const GibbsContext& ctx, int lmax_cap, bool post_filter) {
  switch (m) {
    case ReachMethod::To: return to_extremal_points(p, ctx);
    case ReachMethod::EtoHull: return eto_extremal_hull(p, ctx, lmax_cap);
    case ReachMethod::EtoPrune:
      return eto_extremal_prune(p, ctx, lmax_cap, post_filter);
    case ReachMethod::EtoQutrit: return eto_qutrit(p, ctx);
    case ReachMethod::EtoMonotonic: return eto_monotonic(p, ctx);
    default: throw std::invalid_argument("method not runnable directly");
  }
}

int run_verify(int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  auto report = [&](const std::string& name, int bad, int total) {
    std::cout << name << ": " << (total - bad) << "/" << total << " ok\n";
    failures += bad;
  };

  {  // Gibbs preservation and column stochasticity of random channels.
    int bad = 0;
    std::uniform_int_distribution<int> dim(2, 6);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
      const int d = dim(rng);
      GibbsContext ctx(random_hamiltonian(d, rng));
      std::uniform_int_distribution<int> lvl(1, d);
      int j = lvl(rng), k = lvl(rng);
      if (j == k) k = j % d + 1;
      const StochasticChannel ch = partial_swap(j, k, uni(rng), ctx);
      const PopulationVector out = apply(ch, ctx.gibbs());
      bool ok = linf_distance(out.probs, ctx.gibbs().probs) <= 1e-12;
      for (int col = 0; ok && col < d; ++col) {
        double s = 0.0;
        for (int row = 0; row < d; ++row) s += ch.matrix[row][col];
        ok = std::abs(s - 1.0) <= 1e-12;
      }
      if (!ok) ++bad;
    }
    report("gibbs-preservation", bad, samples);
  }

  {  // Squared beta-swap equals the 1-Delta partial swap.
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
      GibbsContext ctx(random_hamiltonian(3, rng));
      const StochasticChannel b = beta_swap(1, 2, ctx);
      const StochasticChannel bb = compose(b, b);
      const StochasticChannel m = partial_swap(1, 2, 1.0 - ctx.delta(1, 2), ctx);
      double err = 0.0;
      for (int r = 0; r < 3; ++r) err = std::max(err, linf_distance(bb.matrix[r], m.matrix[r]));
      if (err > 1e-14) ++bad;
    }
    report("swap-square-identity", bad, samples);
  }

  {  // Neighbouring swaps give tightly majorized outputs.
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
      const int d = 3 + static_cast<int>(rng() % 3);
      GibbsContext ctx(random_hamiltonian(d, rng));
      PopulationVector p = random_simplex_state(d, rng);
      const BetaOrder pi = beta_order(p, ctx);
      const int m = static_cast<int>(rng() % (d - 1));
      const SwapStep step{pi.perm[m], pi.perm[m + 1], 1.0};
      if (!tightly_majorizes(p, apply_step(step, p, ctx), ctx)) ++bad;
    }
    report("neighbouring-swap-tightness", bad, samples);
  }

  {  // Qutrit vertex sandwich: hull result between the 5 guaranteed states
     // and the full 8-candidate list.
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
      GibbsContext ctx(random_hamiltonian(3, rng));
      PopulationVector p = random_simplex_state(3, rng);
      const ReachableSet hull = eto_extremal_hull(p, ctx);
      const ReachableSet closed = eto_qutrit(p, ctx);
      bool ok = hull.size() <= 8;
      for (const PopulationVector& v : hull.vertices.points) {
        bool found = false;
        for (const PopulationVector& w : closed.vertices.points) {
          if (linf_distance(v.probs, w.probs) <= 1e-8) found = true;
        }
        ok = ok && found;
      }
      if (!ok) ++bad;
    }
    report("qutrit-vertex-sandwich", bad, samples);
  }

  std::cout << (failures == 0 ? "all checks passed\n" : "FAILURES PRESENT\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachable-state polytopes under elementary thermal operations"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker cap (also THERMO_REACH_THREADS); current build runs "
                 "single-threaded");
  if (const char* env = std::getenv("THERMO_REACH_THREADS")) {
    threads = std::atoi(env);
  }

  CommonInputs in;
  std::string out_path, csv_path, method = "eto-hull", target_path;
  int lmax_cap = -1, samples = 64, grid_n = 200, d = 4, count = 1;
  int swap_j = 1, swap_k = 2, traj_samples = 101;
  unsigned long long seed = 1;
  double c1 = -1.0;
  bool post_filter = false;

  auto add_ctx_state = [&](CLI::App* cmd) {
    cmd->add_option("--context", in.context_path, "context JSON file")->required();
    cmd->add_option("--state", in.state_path, "state JSON file")->required();
  };

  CLI::App* curve_cmd = app.add_subcommand("curve", "majorization curve elbows as CSV");
  add_ctx_state(curve_cmd);
  curve_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* order_cmd = app.add_subcommand("order", "beta-order of a state");
  add_ctx_state(order_cmd);

  CLI::App* reach_cmd = app.add_subcommand("reach", "reachable-set vertices");
  add_ctx_state(reach_cmd);
  reach_cmd->add_option("--method", method, "to|eto-hull|eto-prune|eto-qutrit|eto-mono");
  reach_cmd->add_option("--lmax-cap", lmax_cap, "series-length cap (-1: default)");
  reach_cmd->add_flag("--post-filter", post_filter, "extremal-filter prune output");
  reach_cmd->add_option("--json-out", out_path, "output file (default stdout)");
  reach_cmd->add_option("--csv-out", csv_path, "barycentric x,y CSV of the vertices (d = 3)");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "series-length bounds");
  bounds_cmd->add_option("--d", d, "dimension")->required();
  int bounds_samples = 0;
  bounds_cmd->add_option("--samples", bounds_samples, "random instances for the heuristic column");
  bounds_cmd->add_option("--seed", seed, "RNG seed");

  CLI::App* cat_cmd = app.add_subcommand("catalysis", "qubit-catalyst operations");
  cat_cmd->require_subcommand(1);
  CLI::App* slice_cmd = cat_cmd->add_subcommand("slice", "S(p;c) polygon vertices");
  add_ctx_state(slice_cmd);
  slice_cmd->add_option("--c1", c1, "catalyst ground population")->required();
  slice_cmd->add_option("--json-out", out_path, "output file");
  slice_cmd->add_option("--csv-out", csv_path, "barycentric x,y CSV of the vertices");
  CLI::App* sweep_cmd = cat_cmd->add_subcommand("sweep", "slice union over a c1 grid");
  add_ctx_state(sweep_cmd);
  sweep_cmd->add_option("--grid-n", grid_n, "number of c1 grid points");
  sweep_cmd->add_option("--json-out", out_path, "output file");
  sweep_cmd->add_option("--csv-out", csv_path, "barycentric x,y CSV of the pooled vertices");
  CLI::App* opt_cmd = cat_cmd->add_subcommand("optimal-c1", "ground-minimizing catalyst");
  add_ctx_state(opt_cmd);
  CLI::App* trans_cmd = cat_cmd->add_subcommand("transition", "series for p -> q with catalyst");
  add_ctx_state(trans_cmd);
  trans_cmd->add_option("--target", target_path, "target state JSON")->required();
  trans_cmd->add_option("--c1", c1, "catalyst ground population (-1: closed-form optimum)");
  trans_cmd->add_option("--json-out", out_path, "output file");
  CLI::App* track_cmd = cat_cmd->add_subcommand("track", "step-resolved transition accounting");
  add_ctx_state(track_cmd);
  track_cmd->add_option("--target", target_path, "target state JSON")->required();
  track_cmd->add_option("--c1", c1, "catalyst ground population (-1: closed-form optimum)");
  track_cmd->add_option("--json-out", out_path, "output file");
  track_cmd->add_option("--csv-out", csv_path, "per-step monotone CSV");

  CLI::App* traj_cmd = app.add_subcommand("trajectory", "single-swap continuous dynamics CSV");
  add_ctx_state(traj_cmd);
  traj_cmd->add_option("--j", swap_j, "first level");
  traj_cmd->add_option("--k", swap_k, "second level");
  traj_cmd->add_option("--samples", traj_samples, "sample count");
  traj_cmd->add_option("--out", out_path, "output file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "built-in property checks");
  verify_cmd->add_option("--samples", samples, "instances per check");
  verify_cmd->add_option("--seed", seed, "RNG seed");

  CLI::App* sample_cmd = app.add_subcommand("sample", "random contexts and states");
  sample_cmd->add_option("--d", d, "dimension");
  sample_cmd->add_option("--count", count, "number of instances");
  sample_cmd->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*curve_cmd) {
      const GibbsContext ctx = load_context(in.context_path);
      emit(io::curve_csv(curve(load_state(in.state_path), ctx)), out_path);
    } else if (*order_cmd) {
      const GibbsContext ctx = load_context(in.context_path);
      const PopulationVector p = load_state(in.state_path);
      const BetaOrder o = beta_order(p, ctx);
      json j{{"order", o.perm}, {"degenerate_slopes", has_degenerate_slopes(p, ctx)}};
      std::cout << io::dump(j, 2);
    } else if (*reach_cmd) {
      const GibbsContext ctx = load_context(in.context_path);
      const ReachableSet rs = run_reach(parse_method(method), load_state(in.state_path),
                                        ctx, lmax_cap, post_filter);
      if (!csv_path.empty()) {
        io::write_file(csv_path, io::barycentric_csv(rs.vertices));
      }
      emit(io::dump(io::reachable_set_to_json(rs), 2), out_path);
    } else if (*bounds_cmd) {
      json j{{"d", d}, {"theory", lmax_bound(d)}, {"default_cap", default_lmax_cap(d)}};
      if (bounds_samples > 0) {
        std::mt19937_64 rng(seed);
        int max_len = 0, max_verts = 0;
        for (int i = 0; i < bounds_samples; ++i) {
          GibbsContext ctx(random_hamiltonian(d, rng));
          const PopulationVector p = random_simplex_state(d, rng);
          const ReachableSet rs = d <= 4 ? eto_extremal_hull(p, ctx)
                                         : eto_extremal_prune(p, ctx);
          max_len = std::max(max_len, rs.lmax_used);
          max_verts = std::max(max_verts, rs.size());
        }
        j["samples"] = bounds_samples;
        j["max_series_length"] = max_len;
        j["max_vertices"] = max_verts;
      }
      std::cout << io::dump(j, 2);
    } else if (*traj_cmd) {
      const GibbsContext ctx = load_context(in.context_path);
      emit(io::trajectory_csv(
               jc_trajectory(load_state(in.state_path), swap_j, swap_k, ctx, traj_samples),
               ctx),
           out_path);
    } else if (*verify_cmd) {
      return run_verify(samples, seed);
    } else if (*sample_cmd) {
      std::mt19937_64 rng(seed);
      json arr = json::array();
      for (int i = 0; i < count; ++i) {
        GibbsContext ctx(random_hamiltonian(d, rng));
        arr.push_back(json{{"context", io::context_to_json(ctx)},
                           {"state", io::state_to_json(random_simplex_state(d, rng))}});
      }
      std::cout << io::dump(arr, 2);
    } else if (*cat_cmd) {
      const GibbsContext ctx = load_context(in.context_path);
      const PopulationVector p = load_state(in.state_path);
      auto pick_catalyst = [&]() {
        return c1 >= 0.0 ? CatalystSpec{c1}
                         : optimal_catalyst_ground_min(p, ctx).catalyst;
      };
      if (*slice_cmd) {
        const ReachableSet rs = ceto_slice(p, CatalystSpec{c1}, ctx);
        if (!csv_path.empty()) {
          io::write_file(csv_path, io::barycentric_csv(rs.vertices));
        }
        emit(io::dump(io::reachable_set_to_json(rs), 2), out_path);
      } else if (*sweep_cmd) {
        Vec grid(grid_n);
        for (int i = 0; i < grid_n; ++i) grid[i] = (i + 1.0) / grid_n;
        const CetoSweep sw = ceto_sweep(p, ctx, grid);
        json slices = json::array();
        for (size_t i = 0; i < sw.slices.size(); ++i) {
          slices.push_back(json{{"c1", sw.grid[i]},
                                {"vertices", io::point_set_to_json(sw.slices[i].vertices)}});
        }
        json j{{"slices", slices},
               {"union_points", io::point_set_to_json(sw.union_points)},
               {"union_hull", io::point_set_to_json(sw.union_hull)}};
        if (!csv_path.empty()) {
          io::write_file(csv_path, io::barycentric_csv(sw.union_points));
        }
        emit(io::dump(j, 2), out_path);
      } else if (*opt_cmd) {
        const OptimalCatalyst oc = optimal_catalyst_ground_min(p, ctx);
        json j{{"c1", oc.catalyst.c1}, {"order_applicable", oc.order_applicable}};
        std::cout << io::dump(j, 2);
      } else if (*trans_cmd || *track_cmd) {
        const PopulationVector q = load_state(target_path);
        const CatalyticTransition t = decompose_transition(p, q, pick_catalyst(), ctx);
        if (*trans_cmd) {
          emit(io::dump(io::transition_to_json(t), 2), out_path);
        } else {
          const Trajectory traj = track(t, ctx);
          if (!csv_path.empty()) {
            std::string csv = "step,j,k,lam,f_sys,f_cat,f_total,mutual_info\n";
            char row[256];
            for (size_t i = 0; i < traj.entries.size(); ++i) {
              const TrajectoryEntry& e = traj.entries[i];
              std::snprintf(row, sizeof(row), "%zu,%d,%d,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                            i, e.step ? e.step->j : 0, e.step ? e.step->k : 0,
                            e.step ? e.step->lam : 0.0, e.f_sys, e.f_cat, e.f_total,
                            e.mutual_info);
              csv += row;
            }
            io::write_file(csv_path, csv);
          }
          emit(io::dump(io::trajectory_to_json(traj), 2), out_path);
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
