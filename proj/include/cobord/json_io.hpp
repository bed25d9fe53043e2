#pragma once

#include <json.hpp>
#include <string>

#include "cobord/complex.hpp"
#include "cobord/disjointing.hpp"
#include "cobord/dual_graph.hpp"
#include "cobord/multigraph.hpp"
#include "cobord/surgery.hpp"

namespace cobord {

// All file schemas carry "format_version": 1 and reject unknown fields.
inline constexpr int kFormatVersion = 1;

SurfaceComplex complex_from_json(const nlohmann::json& j);
Hypersurface hypersurface_from_json(const SurfaceComplex& m, const nlohmann::json& j);
MultiGraph graph_from_json(const nlohmann::json& j);
Orientation orientation_from_json(const MultiGraph& g, const nlohmann::json& j);

nlohmann::json complex_to_json(const SurfaceComplex& m);
nlohmann::json hypersurface_to_json(const Hypersurface& h);
nlohmann::json walk_to_json(const ClosedWalk& w);
nlohmann::json trace_to_json(const SurfaceComplex& m, const CobordismTrace& trace);
nlohmann::json disjointing_to_json(const DisjointingTrace& trace);
nlohmann::json events_to_json(const SurfaceComplex& m, const EventTrace& trace);

// DOT export of the dual graph, arrowheads following the orientation induced
// by choosing the A-side components; sorted by id for stable diffs.
std::string dual_graph_to_dot(const DualGraph& dg);
nlohmann::json dual_graph_to_json(const DualGraph& dg);

nlohmann::json load_json_file(const std::string& path);

}  // namespace cobord
