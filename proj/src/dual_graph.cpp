#include "cobord/dual_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cobord {

namespace {

// Splits a and b into the common part I (identical components with matching
// co-orientation) and the two symmetric remainders. Throws NotDisjoint on any
// other cell overlap.
struct SplitParts {
  Hypersurface a_only, b_only, common;
};

SplitParts split_common(const SurfaceComplex& m, const Hypersurface& a, const Hypersurface& b) {
  SplitParts out;
  auto a_comps = hypersurface_components(m, a);
  std::set<int> b_cells(b.cells.begin(), b.cells.end());
  std::set<int> common_cells;
  for (const auto& comp : a_comps) {
    bool inside = true;
    for (int c : comp) inside = inside && b_cells.count(c);
    if (!inside) continue;
    Hypersurface ca = subhypersurface(a, comp);
    Hypersurface cb = subhypersurface(b, comp);
    if (ca == cb) {
      for (int c : comp) common_cells.insert(c);
      out.common.cells.insert(out.common.cells.end(), ca.cells.begin(), ca.cells.end());
      out.common.positive.insert(out.common.positive.end(), ca.positive.begin(),
                                 ca.positive.end());
    }
  }
  canonicalize(out.common);
  for (size_t i = 0; i < a.cells.size(); ++i) {
    if (common_cells.count(a.cells[i])) continue;
    if (b_cells.count(a.cells[i]))
      throw not_disjoint("cell " + std::to_string(a.cells[i]) +
                         " shared outside a common component");
    out.a_only.cells.push_back(a.cells[i]);
    out.a_only.positive.push_back(a.positive[i]);
  }
  for (size_t i = 0; i < b.cells.size(); ++i) {
    if (common_cells.count(b.cells[i])) continue;
    out.b_only.cells.push_back(b.cells[i]);
    out.b_only.positive.push_back(b.positive[i]);
  }
  canonicalize(out.a_only);
  canonicalize(out.b_only);
  // The symmetric parts must also be vertex-disjoint from each other.
  if (m.dimension == 2) {
    std::set<int> va;
    for (int e : out.a_only.cells) {
      va.insert(m.edges[e][0]);
      va.insert(m.edges[e][1]);
    }
    for (int e : out.b_only.cells)
      if (va.count(m.edges[e][0]) || va.count(m.edges[e][1]))
        throw not_disjoint("hypersurfaces share a vertex at edge " + std::to_string(e));
  }
  return out;
}

Hypersurface union_disjoint(const Hypersurface& x, const Hypersurface& y) {
  Hypersurface u = x;
  u.cells.insert(u.cells.end(), y.cells.begin(), y.cells.end());
  u.positive.insert(u.positive.end(), y.positive.begin(), y.positive.end());
  canonicalize(u);
  return u;
}

// Cell-set union, first co-orientation wins; used only for cutting.
Hypersurface union_cells(const Hypersurface& x, const Hypersurface& y) {
  Hypersurface u = x;
  for (size_t i = 0; i < y.cells.size(); ++i) {
    if (u.find(y.cells[i]) != -1) continue;
    u.cells.push_back(y.cells[i]);
    u.positive.push_back(y.positive[i]);
    canonicalize(u);
  }
  return u;
}

}  // namespace

DualGraph build_dual_graph(const SurfaceComplex& m, const Hypersurface& a,
                           const Hypersurface& b) {
  Hypersurface av = validate_hypersurface(m, a);
  Hypersurface bv = validate_hypersurface(m, b);
  SplitParts parts = split_common(m, av, bv);

  DualGraph dg;
  dg.common = parts.common;
  dg.sigma = union_disjoint(parts.a_only, parts.b_only);
  Hypersurface cut_along = union_disjoint(dg.sigma, dg.common);
  dg.cut = complement_components(m, cut_along);

  std::vector<std::array<int, 2>> edge_list;
  auto add_components = [&](const Hypersurface& h, char origin) {
    auto comps = hypersurface_components(m, h);
    for (size_t k = 0; k < comps.size(); ++k) {
      DualGraphEdge ed;
      ed.cells = comps[k];
      ed.origin = origin;
      ed.origin_index = static_cast<int>(k);
      ed.neg_chamber = -1;
      ed.pos_chamber = -1;
      for (int c : comps[k]) {
        int i = h.find(c);
        auto [neg, pos] = cell_side_tops(m, c, h.positive[i]);
        int nc = dg.cut.chamber_of_top[neg];
        int pc = dg.cut.chamber_of_top[pos];
        if (ed.neg_chamber == -1) {
          ed.neg_chamber = nc;
          ed.pos_chamber = pc;
        } else if (ed.neg_chamber != nc || ed.pos_chamber != pc) {
          throw internal_error("component sides straddle several chambers");
        }
      }
      edge_list.push_back({ed.neg_chamber, ed.pos_chamber});
      dg.edge_data.push_back(std::move(ed));
    }
  };
  add_components(parts.a_only, 'A');
  add_components(parts.b_only, 'B');
  dg.graph = build_graph(static_cast<int>(dg.cut.chambers.size()), edge_list);
  return dg;
}

Orientation orientation_from_subset(const DualGraph& dg, const std::vector<int>& chosen) {
  std::set<int> chosen_set(chosen.begin(), chosen.end());
  for (int e : chosen)
    if (e < 0 || e >= dg.graph.edge_count()) throw bad_input("chosen edge id out of range");
  Orientation o;
  for (int e = 0; e < dg.graph.edge_count(); ++e) {
    const DualGraphEdge& ed = dg.edge_data[e];
    o.head.push_back(chosen_set.count(e) ? ed.pos_chamber : ed.neg_chamber);
  }
  return o;
}

Hypersurface hypersurface_from_orientation(const SurfaceComplex& m, const DualGraph& dg,
                                           const Orientation& o) {
  check_orientation(dg.graph, o);
  Hypersurface out;
  for (int e = 0; e < dg.graph.edge_count(); ++e) {
    const DualGraphEdge& ed = dg.edge_data[e];
    Hypersurface comp = subhypersurface(dg.sigma, ed.cells);
    bool forward = dg.graph.is_loop(e) || o.head[e] == ed.pos_chamber;
    if (!forward) comp = reverse_hypersurface(m, comp);
    out = union_disjoint(out, comp);
  }
  return out;
}

bool verify_cobordism(const SurfaceComplex& m, const std::vector<int>& w, const Hypersurface& a,
                      const Hypersurface& b) {
  Hypersurface av = validate_hypersurface(m, a);
  Hypersurface bv = validate_hypersurface(m, b);
  SplitParts parts;
  try {
    parts = split_common(m, av, bv);
  } catch (const Error&) {
    return false;  // overlapping outside common components: no cobordism
  }
  Hypersurface cut_along = union_disjoint(union_disjoint(parts.a_only, parts.b_only),
                                          parts.common);
  CutResult cut = complement_components(m, cut_along);
  std::set<int> in_w(w.begin(), w.end());
  for (int id : w)
    if (id < 0 || id >= static_cast<int>(cut.chambers.size()))
      throw bad_input("chamber id out of range");

  auto side_chambers = [&](const Hypersurface& h, size_t i) {
    auto [neg, pos] = cell_side_tops(m, h.cells[i], h.positive[i]);
    return std::array<int, 2>{cut.chamber_of_top[neg], cut.chamber_of_top[pos]};
  };
  for (size_t i = 0; i < parts.a_only.cells.size(); ++i) {
    auto [neg, pos] = side_chambers(parts.a_only, i);
    if (!in_w.count(pos) || in_w.count(neg)) return false;
  }
  for (size_t i = 0; i < parts.b_only.cells.size(); ++i) {
    auto [neg, pos] = side_chambers(parts.b_only, i);
    if (!in_w.count(neg) || in_w.count(pos)) return false;
  }
  for (size_t i = 0; i < parts.common.cells.size(); ++i) {
    auto [neg, pos] = side_chambers(parts.common, i);
    if (in_w.count(neg) || in_w.count(pos)) return false;  // must not meet I
  }
  // A cobordism forces equal classes; breaking this means the side conditions
  // above are wrong, not the input.
  if (!classes_equal(m, av, bv))
    throw internal_error("cobordism verified between non-homologous hypersurfaces");
  return true;
}

CobordismTrace cobordism_sequence(const SurfaceComplex& m, const Hypersurface& a,
                                  const Hypersurface& b) {
  Hypersurface av = validate_hypersurface(m, a);
  Hypersurface bv = validate_hypersurface(m, b);
  if (!classes_equal(m, av, bv))
    throw homology_mismatch("hypersurfaces represent different relative homology classes");

  CobordismTrace trace;
  trace.initial = av;
  trace.terminal = bv;
  DualGraph dg = build_dual_graph(m, av, bv);
  if (dg.graph.edge_count() == 0) return trace;  // a equals b

  std::vector<int> a_edges;
  for (int e = 0; e < dg.graph.edge_count(); ++e)
    if (dg.edge_data[e].origin == 'A') a_edges.push_back(e);
  Orientation o = orientation_from_subset(dg, a_edges);

  auto seq = reversal_sequence(dg.graph, o);
  if (std::holds_alternative<ClosedWalk>(seq))
    throw internal_error(
        "dual-graph orientation is unbalanced although the classes agree; "
        "a graph loop from a nonseparating common configuration should be impossible here");

  // Snapshot for an orientation: components currently oriented neg -> pos,
  // with original co-orientation, plus the untouched common part.
  auto snapshot = [&](const Orientation& oo) {
    Hypersurface s = dg.common;
    for (int e = 0; e < dg.graph.edge_count(); ++e) {
      if (dg.graph.is_loop(e) || oo.head[e] != dg.edge_data[e].pos_chamber) continue;
      s = union_disjoint(s, subhypersurface(dg.sigma, dg.edge_data[e].cells));
    }
    return s;
  };

  // A step's cobordism is a chamber of M cut along (from u to); components
  // absent from that union are never incident to the pushed vertex, so the
  // pushed chamber survives the coarser cut unchanged and only its id moves.
  auto remap_chamber = [&](int v, const Hypersurface& step_union) {
    CutResult cut2 = complement_components(m, step_union);
    int rep = dg.cut.chambers[v].top_cells[0];
    if (m.dimension == 1 && step_union.find(rep / 2) == -1) rep = 2 * (rep / 2);
    return cut2.chamber_of_top[rep];
  };

  Orientation cur = o;
  for (int v : std::get<std::vector<int>>(seq)) {
    CobordismStep step;
    step.pushed_vertex = v;
    step.from = snapshot(cur);
    cur = push_sink(dg.graph, cur, v);
    step.to = snapshot(cur);
    step.cobordism = {remap_chamber(v, union_cells(step.from, step.to))};
    if (!verify_cobordism(m, step.cobordism, step.from, step.to)) {
      if (!dg.common.empty())
        throw not_disjoint(
            "a required cobordism step borders a common component; inputs sharing "
            "components in this configuration are not supported, make them disjoint first");
      throw internal_error("pushed chamber failed cobordism verification");
    }
    trace.steps.push_back(std::move(step));
  }
  if (trace.steps.empty() || !(trace.steps.back().to == bv))
    throw internal_error("reversal sequence did not terminate at the target hypersurface");
  return trace;
}

}  // namespace cobord
