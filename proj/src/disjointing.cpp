#include "cobord/disjointing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace cobord {

namespace {

std::set<int> hyp_vertices(const SurfaceComplex& m, const Hypersurface& h) {
  std::set<int> v;
  if (m.dimension != 2) return v;
  for (int e : h.cells) {
    v.insert(m.edges[e][0]);
    v.insert(m.edges[e][1]);
  }
  return v;
}

}  // namespace

TransverseConfig find_crossings(const SurfaceComplex& m, const Hypersurface& a,
                                const Hypersurface& b) {
  TransverseConfig cfg;
  cfg.a = validate_hypersurface(m, a);
  cfg.b = validate_hypersurface(m, b);
  for (int c : cfg.a.cells)
    if (cfg.b.find(c) != -1)
      throw not_transverse("curves share cell " + std::to_string(c));
  if (m.dimension == 1) return cfg;  // marks never share vertices

  std::set<int> va = hyp_vertices(m, cfg.a);
  std::set<int> vb = hyp_vertices(m, cfg.b);
  std::vector<int> shared;
  for (int v : va)
    if (vb.count(v)) shared.push_back(v);

  std::map<int, std::vector<int>> a_at, b_at;
  for (int e : cfg.a.cells) {
    a_at[m.edges[e][0]].push_back(e);
    a_at[m.edges[e][1]].push_back(e);
  }
  for (int e : cfg.b.cells) {
    b_at[m.edges[e][0]].push_back(e);
    b_at[m.edges[e][1]].push_back(e);
  }
  for (int v : shared) {
    if (m.vertex_on_boundary[v])
      throw not_transverse("curves meet on the boundary at vertex " + std::to_string(v));
    if (a_at[v].size() != 2 || b_at[v].size() != 2)
      throw not_transverse("degenerate meeting at vertex " + std::to_string(v));
    // The four spokes must alternate a, b, a, b around the link.
    const auto& link = m.link_verts[v];
    std::vector<char> kind;
    for (int w : link) {
      int e = m.edge_id(v, w);
      bool in_a = cfg.a.find(e) != -1;
      bool in_b = cfg.b.find(e) != -1;
      if (in_a) kind.push_back('a');
      if (in_b) kind.push_back('b');
    }
    if (kind.size() != 4 || kind[0] == kind[1] || kind[1] == kind[2] || kind[2] == kind[3])
      throw not_transverse("curves meet tangentially at vertex " + std::to_string(v));
    cfg.crossings.push_back(v);
  }
  std::sort(cfg.crossings.begin(), cfg.crossings.end());
  return cfg;
}

namespace {

// Arc of the link cycle of x from vertex `from` to vertex `to`, choosing the
// side that avoids every vertex in `forbidden`. Returns the full vertex list
// including both endpoints.
std::vector<int> link_arc_avoiding(const SurfaceComplex& m, int x, int from, int to,
                                   const std::set<int>& forbidden) {
  const auto& link = m.link_verts[x];
  int L = static_cast<int>(link.size());
  auto pos = [&](int v) {
    for (int k = 0; k < L; ++k)
      if (link[k] == v) return k;
    throw internal_error("vertex missing from link");
  };
  int pf = pos(from), pt = pos(to);
  for (int dir : {1, -1}) {
    std::vector<int> arc{from};
    bool ok = true;
    for (int k = (pf + dir + L) % L; ; k = (k + dir + L) % L) {
      arc.push_back(link[k]);
      if (k == pt) break;
      if (forbidden.count(link[k])) {
        ok = false;
        break;
      }
    }
    if (ok) return arc;
  }
  throw internal_error("no link arc avoids the forbidden spokes");
}

// Walk neighbors of vertex x inside walk w: (previous, next), or (-1,-1).
std::array<int, 2> walk_neighbors(const DirectedWalk& w, int x) {
  int k = static_cast<int>(w.verts.size());
  for (int i = 0; i < k; ++i) {
    if (w.verts[i] != x) continue;
    if (w.closed) return {w.verts[(i - 1 + k) % k], w.verts[(i + 1) % k]};
    if (i == 0 || i == k - 1) return {-1, -1};
    return {w.verts[i - 1], w.verts[i + 1]};
  }
  return {-1, -1};
}

}  // namespace

SmoothingResult oriented_smoothing(const SurfaceComplex& m, const TransverseConfig& cfg,
                                   const std::vector<Hypersurface>& passengers) {
  if (m.dimension != 2) throw bad_input("oriented smoothing needs a dimension-2 complex");
  SmoothingResult out;
  out.trail.rounds.push_back(barycentric_subdivide(m));
  out.trail.rounds.push_back(barycentric_subdivide(out.trail.rounds[0].fine));
  out.complex = out.trail.rounds[1].fine;
  const SurfaceComplex& K = out.complex;
  out.a_img = out.trail.carry(m, cfg.a);
  out.b_img = out.trail.carry(m, cfg.b);
  for (const auto& p : passengers) out.passengers.push_back(out.trail.carry(m, p));

  auto a_walks = hypersurface_walks(K, out.a_img);
  auto b_walks = hypersurface_walks(K, out.b_img);
  auto neighbors_in = [&](const std::vector<DirectedWalk>& walks, int x) {
    for (const auto& w : walks) {
      auto nb = walk_neighbors(w, x);
      if (nb[0] != -1) return nb;
    }
    throw internal_error("crossing vertex missing from curve walk");
  };

  // Smoothed cell set: everything except the four spoke stubs per crossing,
  // plus the two pairing arcs around each crossing vertex.
  std::set<int> dropped;
  Hypersurface sigma0;
  auto add_cells = [&](const Hypersurface& h) {
    for (size_t i = 0; i < h.cells.size(); ++i) {
      if (dropped.count(h.cells[i])) continue;
      sigma0.cells.push_back(h.cells[i]);
      sigma0.positive.push_back(h.positive[i]);
    }
  };
  std::vector<std::vector<int>> arcs;
  for (int x : cfg.crossings) {
    CrossingRecord rec;
    rec.x = x;
    auto [a_in, a_out] = neighbors_in(a_walks, x);
    auto [b_in, b_out] = neighbors_in(b_walks, x);
    rec.a_in_u = a_in;
    rec.a_out_u = a_out;
    rec.b_in_u = b_in;
    rec.b_out_u = b_out;
    for (int u : {a_in, a_out, b_in, b_out}) dropped.insert(K.edge_id(x, u));
    // The pairing joins in-strands to out-strands of the other curve; both
    // arcs are the direct fans between cyclically adjacent spokes.
    arcs.push_back(link_arc_avoiding(K, x, a_in, b_out, {a_out, b_in}));
    arcs.push_back(link_arc_avoiding(K, x, b_in, a_out, {a_in, b_out}));
    out.records.push_back(rec);
  }
  add_cells(out.a_img);
  add_cells(out.b_img);
  for (const auto& arc : arcs) {
    for (size_t i = 0; i + 1 < arc.size(); ++i) {
      int e = K.edge_id(arc[i], arc[i + 1]);
      if (e == -1) throw internal_error("pairing arc skips a link edge");
      int t = K.inducing_triangle(arc[i], arc[i + 1]);
      sigma0.cells.push_back(e);
      sigma0.positive.push_back(t);  // co-orientation continues to the left of travel
    }
  }
  out.sigma0 = validate_hypersurface(K, sigma0);

  // [sigma0] = [a] + [b].
  CycleVector diff = cycle_sub(class_of(K, out.sigma0),
                               class_of(K, out.a_img));
  diff = cycle_sub(diff, class_of(K, out.b_img));
  if (!cycle_is_relative_boundary(K, diff))
    throw internal_error("smoothing changed the homology class");
  return out;
}

namespace {

// True when the strand entering through spoke `in_u` and leaving through
// `out_u` turns left at x: counterclockwise from the out spoke back to the in
// spoke meets no other strand spoke.
bool left_turning(const SurfaceComplex& m, int x, int in_u, int out_u, int other1, int other2) {
  const auto& link = m.link_verts[x];
  int L = static_cast<int>(link.size());
  auto pos = [&](int v) {
    for (int k = 0; k < L; ++k)
      if (link[k] == v) return k;
    throw internal_error("spoke missing from link");
  };
  int pi = pos(in_u), po = pos(out_u), p1 = pos(other1), p2 = pos(other2);
  for (int k = (po + 1) % L;; k = (k + 1) % L) {
    if (k == pi) return true;
    if (k == p1 || k == p2) return false;
  }
}

}  // namespace

TransversePushoff positive_pushoff_transverse(const SmoothingResult& sm,
                                              const std::vector<Hypersurface>& passengers) {
  TransversePushoff out;
  const SurfaceComplex& K2 = sm.complex;
  out.trail.rounds.push_back(barycentric_subdivide(K2));
  out.complex = out.trail.rounds[0].fine;
  const SurfaceComplex& K = out.complex;
  const Subdivision& sub = out.trail.rounds[0];
  out.sigma0_img = sub.carry(K2, sm.sigma0);
  out.a_img = sub.carry(K2, sm.a_img);
  out.b_img = sub.carry(K2, sm.b_img);
  for (const auto& p : passengers) out.passengers.push_back(sub.carry(K2, p));

  // Stub midpoints: w(x,u) is the crossing vertex the push-off uses on the
  // spoke from x toward u.
  auto stub_mid = [&](int x, int u) { return sub.edge_midpoint[K2.edge_id(x, u)]; };

  // Corner bookkeeping per turn vertex of the left-turning strand.
  struct Splice {
    int x;
    int enter_u, exit_u;  // turn vertices (start and end of the sigma0 corner arc)
    int w_in, w_out;      // stub midpoints sigma crosses
    int w_avoid1, w_avoid2;
    bool enter_is_a;      // the curve sigma crosses at w_in
    int ledger_index;
  };
  std::map<int, Splice> splice_at;  // keyed by enter_u
  out.ledger.resize(sm.records.size());
  for (size_t r = 0; r < sm.records.size(); ++r) {
    const CrossingRecord& rec = sm.records[r];
    // The left-parallel of a right-turning corner cuts inside the turn and
    // is the sheet that crosses the two stubs; the left-turner's parallel
    // swings around the outside.
    bool strand1_left =
        left_turning(K2, rec.x, rec.a_in_u, rec.b_out_u, rec.a_out_u, rec.b_in_u);
    Splice sp;
    sp.x = rec.x;
    sp.ledger_index = static_cast<int>(r);
    if (!strand1_left) {
      if (!left_turning(K2, rec.x, rec.b_in_u, rec.a_out_u, rec.a_in_u, rec.b_out_u))
        throw internal_error("neither smoothing strand turns left");
      sp.enter_u = rec.a_in_u;  // strand1 a_in -> b_out turns right
      sp.exit_u = rec.b_out_u;
      sp.enter_is_a = true;
      sp.w_avoid1 = stub_mid(rec.x, rec.a_out_u);
      sp.w_avoid2 = stub_mid(rec.x, rec.b_in_u);
    } else {
      sp.enter_u = rec.b_in_u;  // strand2 b_in -> a_out turns right
      sp.exit_u = rec.a_out_u;
      sp.enter_is_a = false;
      sp.w_avoid1 = stub_mid(rec.x, rec.a_in_u);
      sp.w_avoid2 = stub_mid(rec.x, rec.b_out_u);
    }
    sp.w_in = stub_mid(rec.x, sp.enter_u);
    sp.w_out = stub_mid(rec.x, sp.exit_u);
    splice_at[sp.enter_u] = sp;
    CrossingLedgerEntry led;
    led.crossing_vertex = rec.x;
    led.sigma_a_vertex = sp.enter_is_a ? sp.w_in : sp.w_out;
    led.sigma_b_vertex = sp.enter_is_a ? sp.w_out : sp.w_in;
    out.ledger[r] = led;
  }

  // Assemble sigma: left-parallel of sigma0 with explicit stub-crossing
  // routes at the left-turning corners.
  auto walks = hypersurface_walks(K, out.sigma0_img);
  // Rotate each walk so it never starts inside a corner: the splice handler
  // consumes the whole enter..exit stretch in one piece.
  for (auto& w : walks) {
    int L = static_cast<int>(w.verts.size());
    std::vector<char> covered(L, 0);
    for (int i = 0; i < L; ++i) {
      auto it = splice_at.find(w.verts[i]);
      if (it == splice_at.end()) continue;
      int j = i + 1;
      while (j < i + L && w.verts[j % L] != it->second.exit_u) ++j;
      if (j >= i + L) throw internal_error("corner exit vertex missing from walk");
      for (int k = i; k <= j; ++k) covered[k % L] = 1;
    }
    int start = -1;
    for (int i = 0; i < L; ++i)
      if (!covered[i]) start = start == -1 ? i : start;
    if (start == -1) throw internal_error("walk consists entirely of corners");
    std::rotate(w.verts.begin(), w.verts.begin() + start, w.verts.end());
  }
  std::vector<DirectedWalk> sigma_walks;
  std::map<int, int> component_of_vertex;  // splice w -> sigma component
  for (const auto& w : walks) {
    int L = static_cast<int>(w.verts.size());
    DirectedWalk par;
    par.closed = true;
    auto group_at = [&](int prev, int cur, int next) {
      const auto& link = K.link_verts[cur];
      int n = static_cast<int>(link.size());
      auto pos = [&](int v) {
        for (int k = 0; k < n; ++k)
          if (link[k] == v) return k;
        throw internal_error("walk neighbor missing from link");
      };
      int pn = pos(next), pp = pos(prev);
      std::vector<int> arc;
      for (int k = (pn + 1) % n; k != pp; k = (k + 1) % n) arc.push_back(link[k]);
      std::reverse(arc.begin(), arc.end());
      return arc;
    };
    auto append = [&](const std::vector<int>& group) {
      for (int v : group)
        if (par.verts.empty() || par.verts.back() != v) par.verts.push_back(v);
    };
    int i = 0;
    int sheet_component = static_cast<int>(sigma_walks.size());
    while (i < L) {
      int cur = w.verts[i];
      auto it = splice_at.find(cur);
      if (it == splice_at.end()) {
        append(group_at(w.verts[(i - 1 + L) % L], cur, w.verts[(i + 1) % L]));
        ++i;
        continue;
      }
      const Splice& sp = it->second;
      // Turn corner: approach along the curve as if heading for the crossing
      // vertex, cross the stub, round the crossing inside the strand fan,
      // cross the other stub, and continue outward.
      append(group_at(w.verts[(i - 1 + L) % L], cur, sp.w_in));
      append({sp.w_in});
      append(link_arc_avoiding(K, sp.x, sp.w_in, sp.w_out, {sp.w_avoid1, sp.w_avoid2}));
      append({sp.w_out});
      component_of_vertex[sp.w_in] = sheet_component;
      component_of_vertex[sp.w_out] = sheet_component;
      // Skip the sigma0 corner arc up to the exit turn vertex.
      int j = i + 1;
      while (j < i + L && w.verts[j % L] != sp.exit_u) ++j;
      if (j >= i + L) throw internal_error("corner exit vertex missing from walk");
      append(group_at(sp.w_out, sp.exit_u, w.verts[(j + 1) % L]));
      i = j + 1;
    }
    if (par.verts.size() > 1 && par.verts.front() == par.verts.back()) par.verts.pop_back();
    reduce_walk_spurs(par.verts);
    sigma_walks.push_back(std::move(par));
  }
  out.sigma = hypersurface_from_walks(K, sigma_walks, true);

  // Fill the sheet components and cross-check the ledger against an honest
  // transversality pass.
  auto comps = hypersurface_components(K, out.sigma);
  auto component_of_cell = [&](int cell) {
    for (size_t k = 0; k < comps.size(); ++k)
      if (std::binary_search(comps[k].begin(), comps[k].end(), cell)) return static_cast<int>(k);
    throw internal_error("sigma cell outside every component");
  };
  std::map<int, int> vertex_component;
  for (size_t k = 0; k < out.sigma.cells.size(); ++k) {
    int e = out.sigma.cells[k];
    vertex_component[K.edges[e][0]] = component_of_cell(e);
    vertex_component[K.edges[e][1]] = component_of_cell(e);
  }
  for (auto& led : out.ledger) {
    int ca = vertex_component.at(led.sigma_a_vertex);
    int cb = vertex_component.at(led.sigma_b_vertex);
    if (ca != cb) throw internal_error("ledger crossings landed on different sheets");
    led.sheet_component = ca;
  }
  TransverseConfig against_a = find_crossings(K, out.sigma, out.a_img);
  TransverseConfig against_b = find_crossings(K, out.sigma, out.b_img);
  std::vector<int> expect_a, expect_b;
  for (const auto& led : out.ledger) {
    expect_a.push_back(led.sigma_a_vertex);
    expect_b.push_back(led.sigma_b_vertex);
  }
  std::sort(expect_a.begin(), expect_a.end());
  std::sort(expect_b.begin(), expect_b.end());
  if (against_a.crossings != expect_a || against_b.crossings != expect_b)
    throw internal_error("push-off crossings disagree with the ledger");

  CycleVector diff = cycle_sub(class_of(K, out.sigma), class_of(K, out.sigma0_img));
  if (!cycle_is_relative_boundary(K, diff))
    throw internal_error("push-off changed the homology class");
  return out;
}

BipartiteSplit bipartite_split(const SurfaceComplex& m, const Hypersurface& sigma) {
  DualGraph dg = build_dual_graph(m, sigma, Hypersurface{});
  auto bip = is_bipartite(dg.graph);
  if (std::holds_alternative<ClosedWalk>(bip)) {
    const ClosedWalk& walk = std::get<ClosedWalk>(bip);
    throw not_bipartite("dual graph has an odd cycle of length " +
                        std::to_string(walk.length()) +
                        "; sigma does not represent twice a class");
  }
  const auto& side = std::get<Bipartition>(bip).side;
  BipartiteSplit out;
  for (int v = 0; v < dg.graph.vertex_count; ++v)
    if (side[v] == 0) out.w_chambers.push_back(v);
  // s gathers the components whose positive side touches w, t the others, so
  // that w is a cobordism from s to t in the sense of verify_cobordism (w on
  // the positive side of the source, the negative side of the target).
  for (const auto& ed : dg.edge_data) {
    Hypersurface comp = subhypersurface(dg.sigma, ed.cells);
    Hypersurface& target = side[ed.pos_chamber] == 0 ? out.s : out.t;
    target.cells.insert(target.cells.end(), comp.cells.begin(), comp.cells.end());
    target.positive.insert(target.positive.end(), comp.positive.begin(), comp.positive.end());
  }
  canonicalize(out.s);
  canonicalize(out.t);
  if (!verify_cobordism(m, out.w_chambers, out.s, out.t))
    throw internal_error("bipartition side is not a cobordism from s to t");
  return out;
}

DisjointingTrace disjointing_sequence(const SurfaceComplex& m, const Hypersurface& a,
                                      const Hypersurface& b) {
  if (!m.closed()) throw boundary_unsupported("disjointing needs a closed complex");
  Hypersurface av = validate_hypersurface(m, a);
  Hypersurface bv = validate_hypersurface(m, b);
  if (!classes_equal(m, av, bv))
    throw homology_mismatch("hypersurfaces represent different relative homology classes");

  DisjointingTrace trace;
  trace.complex = m;
  trace.sequence = {av};
  trace.level = {0};
  std::vector<Hypersurface> worklist = {bv};
  int rounds_applied = 0;
  int guard = 0;

  while (!worklist.empty()) {
    if (++guard > 64) throw internal_error("disjointing failed to terminate");
    Hypersurface target = worklist.front();
    Hypersurface cur = trace.sequence.back();
    if (cur == target) {  // exact repeats are dropped, not recorded
      worklist.erase(worklist.begin());
      continue;
    }

    TransverseConfig cfg;
    bool transverse = true;
    try {
      cfg = find_crossings(trace.complex, cur, target);
    } catch (const Error& e) {
      if (e.code() != "NotTransverse") throw;
      transverse = false;
    }
    if (!transverse) {
      // Shared cells or tangential meetings: replace cur by a parallel copy
      // first ("let A+ be a parallel copy of A").
      std::vector<Hypersurface> pax = trace.sequence;
      pax.insert(pax.end(), worklist.begin(), worklist.end());
      PushoffResult push = parallel_pushoff(trace.complex, cur, Side::positive, pax);
      for (size_t i = 0; i < trace.sequence.size(); ++i) trace.sequence[i] = push.passengers[i];
      for (size_t i = 0; i < worklist.size(); ++i)
        worklist[i] = push.passengers[trace.sequence.size() + i];
      trace.sequence.back() = push.image;
      rounds_applied += static_cast<int>(push.trail.rounds.size());
      trace.complex = push.complex;
      trace.sequence.push_back(push.pushed);
      trace.level.push_back(rounds_applied);
      continue;
    }

    int c = static_cast<int>(cfg.crossings.size());
    if (c == 0) {
      trace.sequence.push_back(target);
      trace.level.push_back(rounds_applied);
      worklist.erase(worklist.begin());
      continue;
    }

    // One halving round: smooth, push off, split, recurse through the middle.
    std::vector<Hypersurface> pax = trace.sequence;
    pax.insert(pax.end(), worklist.begin(), worklist.end());
    SmoothingResult sm = oriented_smoothing(trace.complex, cfg, pax);
    TransversePushoff po = positive_pushoff_transverse(sm, sm.passengers);
    rounds_applied += 3;
    trace.complex = po.complex;
    for (size_t i = 0; i < trace.sequence.size(); ++i) trace.sequence[i] = po.passengers[i];
    for (size_t i = 0; i < worklist.size(); ++i)
      worklist[i] = po.passengers[trace.sequence.size() + i];

    BipartiteSplit split = bipartite_split(trace.complex, po.sigma);
    std::set<int> s_cells(split.s.cells.begin(), split.s.cells.end());
    auto comps = hypersurface_components(trace.complex, po.sigma);
    int k_s = 0, k_t = 0;
    for (const auto& led : po.ledger) {
      bool on_s = s_cells.count(comps[led.sheet_component][0]) > 0;
      (on_s ? k_s : k_t)++;
    }
    Hypersurface mid = k_s <= k_t ? split.s : split.t;
    int k = std::min(k_s, k_t);
    if (k_s + k_t != c || k > c / 2)
      throw internal_error("halving bound violated by the crossing ledger");
    trace.rounds.push_back({c, k});

    if (!classes_equal(trace.complex, mid, trace.sequence.back()))
      throw internal_error("middle hypersurface left the homology class");
    worklist.insert(worklist.begin(), mid);
  }

  // Final coherence: consecutive entries disjoint, classes constant.
  for (size_t i = 0; i + 1 < trace.sequence.size(); ++i) {
    const Hypersurface& x = trace.sequence[i];
    const Hypersurface& y = trace.sequence[i + 1];
    for (int cell : x.cells)
      if (y.find(cell) != -1) throw internal_error("consecutive trace entries share a cell");
    if (trace.complex.dimension == 2) {
      std::set<int> vx = hyp_vertices(trace.complex, x);
      for (int e : y.cells)
        if (vx.count(trace.complex.edges[e][0]) || vx.count(trace.complex.edges[e][1]))
          throw internal_error("consecutive trace entries share a vertex");
    }
    if (!classes_equal(trace.complex, x, y))
      throw internal_error("trace entries left the homology class");
  }
  return trace;
}

}  // namespace cobord
