#include "thermo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thermo::io {

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void dump_rec(const json& j, std::string& out, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<size_t>(indent) * d, ' ');
    }
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      pad(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        dump_rec(v, out, indent, depth + 1);
      }
      pad(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += fmt(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(x.get<double>());
  return v;
}

json vec_to_json(const Vec& v) {
  json j = json::array();
  for (double x : v) j.push_back(x);
  return j;
}

}  // namespace

std::string dump(const json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  if (indent >= 0) out += '\n';
  return out;
}

json context_to_json(const GibbsContext& ctx) {
  return json{{"beta_energies", vec_to_json(ctx.hamiltonian().energies)}};
}

GibbsContext context_from_json(const json& j) {
  return GibbsContext(Hamiltonian(vec_from_json(j.at("beta_energies"))));
}

json state_to_json(const PopulationVector& p) {
  return json{{"probs", vec_to_json(p.probs)}};
}

PopulationVector state_from_json(const json& j) {
  return PopulationVector(vec_from_json(j.at("probs")));
}

json series_to_json(const SwapSeries& s) {
  json j = json::array();
  for (const SwapStep& st : s.steps) {
    j.push_back(json{{"j", st.j}, {"k", st.k}, {"lam", st.lam}});
  }
  return j;
}

SwapSeries series_from_json(const json& j) {
  SwapSeries s;
  for (const auto& e : j) {
    s.steps.push_back(
        {e.at("j").get<int>(), e.at("k").get<int>(), e.at("lam").get<double>()});
  }
  return s;
}

json point_set_to_json(const PointSet& s) {
  json pts = json::array();
  for (const PopulationVector& p : s.points) pts.push_back(vec_to_json(p.probs));
  json j{{"points", pts}};
  if (s.labelled()) {
    json labels = json::array();
    for (const PointLabel& l : s.labels) {
      json order = json::array();
      for (int x : l.order.perm) order.push_back(x);
      labels.push_back(json{{"series", series_to_json(l.series)}, {"order", order}});
    }
    j["labels"] = labels;
  }
  return j;
}

PointSet point_set_from_json(const json& j) {
  PointSet s;
  for (const auto& p : j.at("points")) {
    s.points.push_back(PopulationVector(vec_from_json(p)));
  }
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      PointLabel lab;
      lab.series = series_from_json(l.at("series"));
      for (const auto& x : l.at("order")) lab.order.perm.push_back(x.get<int>());
      s.labels.push_back(std::move(lab));
    }
    if (s.labels.size() != s.points.size()) {
      throw std::invalid_argument("label/point count mismatch");
    }
  }
  return s;
}

json reachable_set_to_json(const ReachableSet& rs) {
  return json{{"method", method_name(rs.method)},
              {"lmax_used", rs.lmax_used},
              {"exhausted", rs.exhausted},
              {"superset", rs.superset},
              {"vertices", point_set_to_json(rs.vertices)}};
}

json transition_to_json(const CatalyticTransition& t) {
  return json{{"initial", state_to_json(t.initial)},
              {"target", state_to_json(t.target)},
              {"c1", t.catalyst.c1},
              {"recombined", t.recombined},
              {"series", series_to_json(t.series)},
              {"support", point_set_to_json(t.support)},
              {"weights", vec_to_json(t.weights)}};
}

json trajectory_to_json(const Trajectory& traj) {
  json steps = json::array();
  for (const TrajectoryEntry& e : traj.entries) {
    json row{{"joint", vec_to_json(e.joint.probs)},
             {"f_sys", e.f_sys},
             {"f_cat", e.f_cat},
             {"f_total", e.f_total},
             {"mutual_info", e.mutual_info},
             {"system_unchanged", e.system_unchanged}};
    if (e.step) {
      row["step"] = json{{"j", e.step->j}, {"k", e.step->k}, {"lam", e.step->lam}};
    }
    steps.push_back(std::move(row));
  }
  return json{{"entries", steps}};
}

std::string curve_csv(const MajorizationCurve& c) {
  std::string out = "x,y\n0,0\n";
  for (const auto& [x, y] : c.elbows) {
    if (x == 0.0 && y == 0.0) continue;
    out += fmt(x) + "," + fmt(y) + "\n";
  }
  return out;
}

std::string trajectory_csv(const std::vector<TrajectorySample>& samples,
                           const GibbsContext& ctx) {
  std::string out = "t";
  for (int i = 1; i <= ctx.dim(); ++i) out += ",p_" + std::to_string(i);
  out += ",F\n";
  for (const TrajectorySample& s : samples) {
    out += fmt(s.t);
    for (double x : s.state.probs) out += "," + fmt(x);
    out += "," + fmt(nonequilibrium_free_energy(s.state, ctx)) + "\n";
  }
  return out;
}

std::string barycentric_csv(const PointSet& s) {
  std::string out = "x,y\n";
  for (const PopulationVector& p : s.points) {
    const auto [x, y] = barycentric(p);
    out += fmt(x) + "," + fmt(y) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace thermo::io
