#include "cobord/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cobord {

using nlohmann::json;

namespace {

void check_fields(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw bad_input("expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw bad_input("unknown field \"" + it.key() + "\"");
  }
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != kFormatVersion)
    throw bad_input("missing or unsupported format_version");
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw bad_input(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<std::array<int, 2>> get_pairs(const json& j, const char* key) {
  std::vector<std::array<int, 2>> out;
  if (!j.contains(key) || !j[key].is_array())
    throw bad_input(std::string("missing array field \"") + key + "\"");
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw bad_input(std::string("bad entry in \"") + key + "\"");
    out.push_back({row[0].get<int>(), row[1].get<int>()});
  }
  return out;
}

std::vector<std::array<int, 3>> get_triples(const json& j, const char* key) {
  std::vector<std::array<int, 3>> out;
  if (!j.contains(key) || !j[key].is_array())
    throw bad_input(std::string("missing array field \"") + key + "\"");
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != 3)
      throw bad_input(std::string("bad entry in \"") + key + "\"");
    out.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  return out;
}

std::vector<int> get_ints(const json& j, const char* key) {
  std::vector<int> out;
  if (!j.contains(key) || !j[key].is_array())
    throw bad_input(std::string("missing array field \"") + key + "\"");
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw bad_input(std::string("bad entry in \"") + key + "\"");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

SurfaceComplex complex_from_json(const json& j) {
  check_fields(j, {"format_version", "dimension", "vertices", "triangles", "segments"});
  int dim = get_int(j, "dimension");
  int vertices = get_int(j, "vertices");
  if (dim == 2) {
    if (j.contains("segments")) throw bad_input("dimension-2 complex with segments");
    return validate_complex(2, vertices, get_triples(j, "triangles"), {});
  }
  if (j.contains("triangles")) throw bad_input("dimension-1 complex with triangles");
  return validate_complex(1, vertices, {}, get_pairs(j, "segments"));
}

Hypersurface hypersurface_from_json(const SurfaceComplex& m, const json& j) {
  check_fields(j, {"format_version", "cells", "positive_side"});
  Hypersurface h;
  h.cells = get_ints(j, "cells");
  h.positive = get_ints(j, "positive_side");
  return validate_hypersurface(m, h);
}

MultiGraph graph_from_json(const json& j) {
  check_fields(j, {"format_version", "vertices", "edges"});
  return build_graph(get_int(j, "vertices"), get_pairs(j, "edges"));
}

Orientation orientation_from_json(const MultiGraph& g, const json& j) {
  check_fields(j, {"format_version", "heads"});
  Orientation o;
  o.head = get_ints(j, "heads");
  check_orientation(g, o);
  return o;
}

json complex_to_json(const SurfaceComplex& m) {
  json j;
  j["format_version"] = kFormatVersion;
  j["dimension"] = m.dimension;
  j["vertices"] = m.vertex_count;
  if (m.dimension == 2) {
    json tris = json::array();
    for (auto& t : m.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
  } else {
    json segs = json::array();
    for (auto& s : m.segments) segs.push_back({s[0], s[1]});
    j["segments"] = std::move(segs);
  }
  return j;
}

json hypersurface_to_json(const Hypersurface& h) {
  json j;
  j["format_version"] = kFormatVersion;
  j["cells"] = h.cells;
  j["positive_side"] = h.positive;
  return j;
}

json walk_to_json(const ClosedWalk& w) {
  json j;
  j["vertices"] = w.vertices;
  j["edge_ids"] = w.edge_ids;
  j["length"] = w.length();
  return j;
}

json trace_to_json(const SurfaceComplex& m, const CobordismTrace& trace) {
  (void)m;
  json steps = json::array();
  for (const auto& st : trace.steps) {
    json s;
    s["pushed_vertex"] = st.pushed_vertex;
    s["cobordism_chambers"] = st.cobordism;
    s["hypersurface_cells"] = st.to.cells;
    s["coorientations"] = st.to.positive;
    steps.push_back(std::move(s));
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["initial"] = hypersurface_to_json(trace.initial);
  j["final"] = hypersurface_to_json(trace.terminal);
  j["steps"] = std::move(steps);
  return j;
}

json disjointing_to_json(const DisjointingTrace& trace) {
  json entries = json::array();
  for (size_t i = 0; i < trace.sequence.size(); ++i) {
    json e;
    e["refinement_level"] = trace.level[i];
    e["cells"] = trace.sequence[i].cells;
    e["coorientations"] = trace.sequence[i].positive;
    entries.push_back(std::move(e));
  }
  json rounds = json::array();
  for (const auto& r : trace.rounds) {
    json e;
    e["crossings_before"] = r.crossings_before;
    e["crossings_mid"] = r.crossings_mid;
    rounds.push_back(std::move(e));
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["final_complex"] = complex_to_json(trace.complex);
  j["entries"] = std::move(entries);
  j["halving_rounds"] = std::move(rounds);
  return j;
}

json events_to_json(const SurfaceComplex& m, const EventTrace& trace) {
  json snapshots = json::array();
  snapshots.push_back(hypersurface_to_json(trace.start));
  json events = json::array();
  for (const auto& ev : trace.events) {
    json e;
    e["kind"] = event_kind_name(ev.kind);
    if (ev.index >= 0) e["index"] = ev.index;
    e["support"] = ev.support;
    e["forward"] = ev.forward;
    e["snapshot_ref"] = snapshots.size();
    snapshots.push_back(hypersurface_to_json(ev.after));
    events.push_back(std::move(e));
  }
  json summary;
  for (const auto& ev : trace.events) {
    std::string k = event_kind_name(ev.kind);
    summary[k] = summary.contains(k) ? summary[k].get<int>() + 1 : 1;
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["events"] = std::move(events);
  j["snapshots"] = std::move(snapshots);
  j["summary"] = std::move(summary);
  j["normal_form"] = trace.normal_form;
  (void)m;
  return j;
}

std::string dual_graph_to_dot(const DualGraph& dg) {
  // Arrowheads follow the orientation induced by the A-side components.
  std::ostringstream out;
  out << "digraph dual {\n";
  for (int v = 0; v < dg.graph.vertex_count; ++v) {
    out << "  v" << v << " [label=\"chamber " << v << " (size "
        << dg.cut.chambers[v].top_cells.size() << ")\"];\n";
  }
  for (int e = 0; e < dg.graph.edge_count(); ++e) {
    const DualGraphEdge& ed = dg.edge_data[e];
    int from = ed.origin == 'A' ? ed.neg_chamber : ed.pos_chamber;
    int to = ed.origin == 'A' ? ed.pos_chamber : ed.neg_chamber;
    out << "  v" << from << " -> v" << to << " [label=\"" << ed.origin << "#"
        << ed.origin_index << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json dual_graph_to_json(const DualGraph& dg) {
  json vertices = json::array();
  for (const auto& ch : dg.cut.chambers) {
    json v;
    v["id"] = ch.id;
    v["size"] = ch.top_cells.size();
    vertices.push_back(std::move(v));
  }
  json edges = json::array();
  for (int e = 0; e < dg.graph.edge_count(); ++e) {
    const DualGraphEdge& ed = dg.edge_data[e];
    json r;
    r["label"] = std::string(1, ed.origin) + "#" + std::to_string(ed.origin_index);
    r["negative_chamber"] = ed.neg_chamber;
    r["positive_chamber"] = ed.pos_chamber;
    r["cells"] = ed.cells;
    edges.push_back(std::move(r));
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad_input("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw bad_input("parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace cobord
