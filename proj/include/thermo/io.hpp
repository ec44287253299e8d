#pragma once

#include <string>

#include <json.hpp>

#include "thermo/catalysis.hpp"

namespace thermo::io {

using json = nlohmann::ordered_json;

/// Canonical serialization: insertion-ordered keys, floats printed %.12g.
/// Identical in-memory values always produce identical bytes.
std::string dump(const json& j, int indent = -1);

json context_to_json(const GibbsContext& ctx);
GibbsContext context_from_json(const json& j);

json state_to_json(const PopulationVector& p);
PopulationVector state_from_json(const json& j);

json series_to_json(const SwapSeries& s);
SwapSeries series_from_json(const json& j);

json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const json& j);

json reachable_set_to_json(const ReachableSet& rs);

json transition_to_json(const CatalyticTransition& t);

json trajectory_to_json(const Trajectory& traj);

/// CSV rows "x,y" for the majorization curve elbows, origin included.
std::string curve_csv(const MajorizationCurve& c);

/// CSV rows "t,p_1..p_d,F" for a single-swap trajectory.
std::string trajectory_csv(const std::vector<TrajectorySample>& samples,
                           const GibbsContext& ctx);

/// CSV rows "x,y" of barycentric projections, one point per row.
std::string barycentric_csv(const PointSet& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace thermo::io
