#include "cobord/refine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace cobord {

Subdivision barycentric_subdivide(const SurfaceComplex& m) {
  Subdivision out;
  if (m.dimension == 1) {
    int V = m.vertex_count, S = static_cast<int>(m.segments.size());
    out.seg_midpoint.resize(S);
    std::vector<std::array<int, 2>> segs;
    for (int s = 0; s < S; ++s) {
      out.seg_midpoint[s] = V + s;
      segs.push_back({m.segments[s][0], V + s});
      segs.push_back({V + s, m.segments[s][1]});
    }
    out.fine = validate_complex(1, V + S, {}, segs);
    out.seg_children.resize(S);
    for (int s = 0; s < S; ++s) out.seg_children[s] = {2 * s, 2 * s + 1};
    return out;
  }

  int V = m.vertex_count, E = m.edge_count(), T = m.top_count();
  out.edge_midpoint.resize(E);
  out.tri_center.resize(T);
  for (int e = 0; e < E; ++e) out.edge_midpoint[e] = V + e;
  for (int t = 0; t < T; ++t) out.tri_center[t] = V + E + t;

  std::vector<std::array<int, 3>> tris;
  out.tri_children.resize(T);
  out.tri_parent.clear();
  for (int t = 0; t < T; ++t) {
    auto [a, b, c] = m.triangles[t];
    int mab = out.edge_midpoint[m.edge_id(a, b)];
    int mbc = out.edge_midpoint[m.edge_id(b, c)];
    int mca = out.edge_midpoint[m.edge_id(c, a)];
    int z = out.tri_center[t];
    std::array<std::array<int, 3>, 6> children{{{a, mab, z},
                                                {mab, b, z},
                                                {b, mbc, z},
                                                {mbc, c, z},
                                                {c, mca, z},
                                                {mca, a, z}}};
    for (int k = 0; k < 6; ++k) {
      out.tri_children[t][k] = static_cast<int>(tris.size());
      tris.push_back(children[k]);
      out.tri_parent.push_back(t);
    }
  }
  out.fine = validate_complex(2, V + E + T, tris, {});
  out.edge_children.resize(E);
  for (int e = 0; e < E; ++e) {
    auto [u, v] = m.edges[e];
    int mid = out.edge_midpoint[e];
    int c0 = out.fine.edge_id(u, mid);
    int c1 = out.fine.edge_id(mid, v);
    if (c0 == -1 || c1 == -1) throw internal_error("subdivision lost an edge");
    out.edge_children[e] = {c0, c1};
  }
  return out;
}

Hypersurface Subdivision::carry(const SurfaceComplex& coarse, const Hypersurface& h) const {
  Hypersurface out;
  if (coarse.dimension == 1) {
    for (size_t i = 0; i < h.cells.size(); ++i) {
      int s = h.cells[i];
      int mid = seg_midpoint[s];
      // Half on the mark's negative side, still pointing the same way.
      bool toward_second = h.positive[i] == coarse.segments[s][1];
      out.cells.push_back(toward_second ? seg_children[s][0] : seg_children[s][1]);
      out.positive.push_back(mid);
    }
    return validate_hypersurface(fine, out);
  }
  for (size_t i = 0; i < h.cells.size(); ++i) {
    int e = h.cells[i];
    int parent_pos = h.positive[i];
    for (int child : edge_children[e]) {
      int t0 = fine.edge_tri_inducing[child];
      int t1 = fine.edge_tri_anti[child];
      int pos = -1;
      if (t0 != -1 && tri_parent[t0] == parent_pos) pos = t0;
      if (t1 != -1 && tri_parent[t1] == parent_pos) pos = t1;
      if (pos == -1) throw internal_error("carried positive side lost under subdivision");
      out.cells.push_back(child);
      out.positive.push_back(pos);
    }
  }
  return validate_hypersurface(fine, out);
}

std::vector<int> Subdivision::carry_region(const std::vector<int>& tris) const {
  std::vector<int> out;
  for (int t : tris)
    for (int c : tri_children[t]) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

Hypersurface RefinementTrail::carry(const SurfaceComplex& base, const Hypersurface& h) const {
  const SurfaceComplex* cur = &base;
  Hypersurface img = h;
  for (const Subdivision& s : rounds) {
    img = s.carry(*cur, img);
    cur = &s.fine;
  }
  return img;
}

std::vector<int> RefinementTrail::carry_region(const std::vector<int>& tris) const {
  std::vector<int> img = tris;
  for (const Subdivision& s : rounds) img = s.carry_region(img);
  return img;
}

std::vector<DirectedWalk> hypersurface_walks(const SurfaceComplex& m, const Hypersurface& h) {
  if (m.dimension != 2) throw bad_input("walks are defined for dimension-2 complexes");
  std::vector<DirectedWalk> walks;
  // tau direction of each cell: the direction its positive triangle induces.
  std::map<int, int> next_of;  // tail vertex -> cell index in h
  std::vector<std::array<int, 2>> dir(h.cells.size());
  for (size_t i = 0; i < h.cells.size(); ++i) {
    int e = h.cells[i];
    auto [u, v] = m.edges[e];
    bool canonical = h.positive[i] == m.edge_tri_inducing[e];
    dir[i] = canonical ? std::array<int, 2>{u, v} : std::array<int, 2>{v, u};
    if (next_of.count(dir[i][0]))
      throw internal_error("two hypersurface cells leave the same vertex");
    next_of[dir[i][0]] = static_cast<int>(i);
  }
  std::set<int> heads;
  for (auto& d : dir) heads.insert(d[1]);

  std::vector<char> used(h.cells.size(), 0);
  auto emit_from = [&](int start_idx, bool closed) {
    DirectedWalk w;
    w.closed = closed;
    int i = start_idx;
    w.verts.push_back(dir[i][0]);
    while (true) {
      if (used[i]) throw internal_error("walk revisits a cell");
      used[i] = 1;
      int head = dir[i][1];
      auto it = next_of.find(head);
      if (it == next_of.end()) {
        if (closed) throw internal_error("closed walk ran into a dead end");
        w.verts.push_back(head);
        break;
      }
      if (closed && it->second == start_idx) break;
      w.verts.push_back(head);
      i = it->second;
    }
    walks.push_back(std::move(w));
  };
  for (size_t i = 0; i < h.cells.size(); ++i)
    if (!used[i] && !heads.count(dir[i][0])) emit_from(static_cast<int>(i), false);
  for (size_t i = 0; i < h.cells.size(); ++i)
    if (!used[i]) emit_from(static_cast<int>(i), true);
  return walks;
}

Hypersurface hypersurface_from_walks(const SurfaceComplex& m,
                                     const std::vector<DirectedWalk>& walks,
                                     bool positive_on_left) {
  Hypersurface h;
  for (const DirectedWalk& w : walks) {
    int k = static_cast<int>(w.verts.size());
    int steps = w.closed ? k : k - 1;
    for (int i = 0; i < steps; ++i) {
      int p = w.verts[i], q = w.verts[(i + 1) % k];
      int e = m.edge_id(p, q);
      if (e == -1) throw internal_error("walk uses a missing edge");
      int t = positive_on_left ? m.inducing_triangle(p, q) : m.inducing_triangle(q, p);
      if (t == -1) throw internal_error("walk edge lacks the required side triangle");
      h.cells.push_back(e);
      h.positive.push_back(t);
    }
  }
  return validate_hypersurface(m, h);
}

namespace {

int link_position(const std::vector<int>& link, int v) {
  for (size_t k = 0; k < link.size(); ++k)
    if (link[k] == v) return static_cast<int>(k);
  return -1;
}

// Left-fan interior of the corner prev -> cur -> next, listed in travel order
// (prev side first). Open-walk endpoints pass prev = -1 or next = -1.
std::vector<int> left_fan_interior(const SurfaceComplex& m, int prev, int cur, int next) {
  const auto& link = m.link_verts[cur];
  int L = static_cast<int>(link.size());
  std::vector<int> ccw_arc;
  if (prev != -1 && next != -1) {
    int pn = link_position(link, next), pp = link_position(link, prev);
    if (pn == -1 || pp == -1) throw internal_error("walk neighbor missing from link");
    if (m.vertex_interior_link[cur]) {
      for (int k = (pn + 1) % L; k != pp; k = (k + 1) % L) ccw_arc.push_back(link[k]);
    } else if (pn < pp) {
      for (int k = pn + 1; k < pp; ++k) ccw_arc.push_back(link[k]);
    } else {
      throw internal_error("left fan would cross the boundary at vertex " + std::to_string(cur));
    }
  } else if (prev == -1) {
    int pn = link_position(link, next);
    if (pn == -1) throw internal_error("walk neighbor missing from link");
    for (int k = pn + 1; k < L; ++k) ccw_arc.push_back(link[k]);
  } else {
    int pp = link_position(link, prev);
    if (pp == -1) throw internal_error("walk neighbor missing from link");
    for (int k = 0; k < pp; ++k) ccw_arc.push_back(link[k]);
  }
  std::reverse(ccw_arc.begin(), ccw_arc.end());
  return ccw_arc;
}

void append_dedup(std::vector<int>& walk, const std::vector<int>& group) {
  for (int v : group)
    if (walk.empty() || walk.back() != v) walk.push_back(v);
}

}  // namespace

void reduce_walk_spurs(std::vector<int>& cyclic_verts) {
  bool changed = true;
  while (changed && cyclic_verts.size() >= 3) {
    changed = false;
    for (int i = 0; i < static_cast<int>(cyclic_verts.size()) && cyclic_verts.size() >= 3; ++i) {
      int n = static_cast<int>(cyclic_verts.size());
      if (cyclic_verts[i] != cyclic_verts[(i + 2) % n]) continue;
      int a = (i + 1) % n, b = (i + 2) % n;
      cyclic_verts.erase(cyclic_verts.begin() + std::max(a, b));
      cyclic_verts.erase(cyclic_verts.begin() + std::min(a, b));
      changed = true;
      i = -1;
    }
  }
}

DirectedWalk left_parallel(const SurfaceComplex& m, const DirectedWalk& walk) {
  int k = static_cast<int>(walk.verts.size());
  DirectedWalk out;
  out.closed = walk.closed;
  if (walk.closed) {
    for (int i = 0; i < k; ++i) {
      int prev = walk.verts[(i - 1 + k) % k];
      int cur = walk.verts[i];
      int next = walk.verts[(i + 1) % k];
      auto group = left_fan_interior(m, prev, cur, next);
      if (group.empty())
        throw internal_error("left fan at vertex " + std::to_string(cur) +
                             " has no interior; subdivide first");
      append_dedup(out.verts, group);
    }
    if (out.verts.size() > 1 && out.verts.front() == out.verts.back()) out.verts.pop_back();
    reduce_walk_spurs(out.verts);
  } else {
    for (int i = 0; i < k; ++i) {
      int prev = i == 0 ? -1 : walk.verts[i - 1];
      int next = i == k - 1 ? -1 : walk.verts[i + 1];
      auto group = left_fan_interior(m, prev, walk.verts[i], next);
      append_dedup(out.verts, group);
    }
  }
  std::set<int> seen(out.verts.begin(), out.verts.end());
  if (seen.size() != out.verts.size())
    throw internal_error("parallel walk is not vertex-simple; subdivide first");
  std::set<int> on_curve(walk.verts.begin(), walk.verts.end());
  for (int v : out.verts)
    if (on_curve.count(v))
      throw internal_error("parallel walk touches the curve; subdivide first");
  return out;
}

namespace {

PushoffResult pushoff_dim1(const SurfaceComplex& m, const Hypersurface& s, Side side,
                           const std::vector<Hypersurface>& passengers) {
  // Two rounds leave four quarters per original segment. Images land on the
  // mark's negative-side outer quarter; the push takes the first free slot
  // toward the positive side, always inside the original segment.
  RefinementTrail trail;
  trail.rounds.push_back(barycentric_subdivide(m));
  trail.rounds.push_back(barycentric_subdivide(trail.rounds[0].fine));
  const SurfaceComplex& fine = trail.rounds[1].fine;

  bool mirrored = side == Side::negative;
  Hypersurface subject = mirrored ? reverse_hypersurface(m, s) : s;

  Hypersurface image = trail.carry(m, subject);
  std::vector<Hypersurface> carried;
  for (const auto& p : passengers) carried.push_back(trail.carry(m, p));
  std::set<int> occupied;
  for (const auto& p : carried)
    for (int c : p.cells) occupied.insert(c);

  // Quarters of segment s0, ordered from endpoint 0 to endpoint 1.
  auto quarters = [&](int s0) {
    std::vector<int> q;
    for (int half : trail.rounds[0].seg_children[s0])
      for (int quarter : trail.rounds[1].seg_children[half]) q.push_back(quarter);
    return q;
  };

  Hypersurface pushed;
  for (size_t i = 0; i < subject.cells.size(); ++i) {
    int s0 = subject.cells[i];
    bool toward_second = subject.positive[i] == m.segments[s0][1];
    std::vector<int> q = quarters(s0);
    if (!toward_second) std::reverse(q.begin(), q.end());  // order along the positive direction
    int slot = -1;
    for (size_t j = 1; j < q.size(); ++j) {
      if (!occupied.count(q[j]) && image.find(q[j]) == -1) {
        slot = q[j];
        break;
      }
    }
    if (slot == -1) throw internal_error("no free quarter for the pushed mark");
    pushed.cells.push_back(slot);
    // Quarters are stored running from the endpoint-0 side to the endpoint-1
    // side; the pushed mark keeps the subject's global direction.
    auto seg = fine.segments[slot];
    pushed.positive.push_back(toward_second ? seg[1] : seg[0]);
  }
  pushed = validate_hypersurface(fine, pushed);

  PushoffResult res;
  if (mirrored) {
    image = reverse_hypersurface(fine, image);
    pushed = reverse_hypersurface(fine, pushed);
  }
  res.image = std::move(image);
  res.pushed = std::move(pushed);
  res.passengers = std::move(carried);
  res.complex = fine;
  res.trail = std::move(trail);
  for (int c : res.pushed.cells)
    if (res.image.find(c) != -1) throw internal_error("pushed mark collides with the image");
  if (!classes_equal(res.complex, res.image, res.pushed))
    throw internal_error("push-off changed the homology class");
  return res;
}

bool vertex_disjoint(const SurfaceComplex& m, const Hypersurface& a, const Hypersurface& b) {
  std::set<int> va;
  for (int e : a.cells) {
    va.insert(m.edges[e][0]);
    va.insert(m.edges[e][1]);
  }
  for (int e : b.cells)
    if (va.count(m.edges[e][0]) || va.count(m.edges[e][1])) return false;
  return true;
}

}  // namespace

PushoffResult parallel_pushoff(const SurfaceComplex& m, const Hypersurface& s, Side side,
                               const std::vector<Hypersurface>& passengers,
                               int extra_rounds_budget) {
  if (m.dimension == 1) return pushoff_dim1(m, s, side, passengers);

  RefinementTrail trail;
  trail.rounds.push_back(barycentric_subdivide(m));
  trail.rounds.push_back(barycentric_subdivide(trail.rounds.back().fine));

  for (int attempt = 0;; ++attempt) {
    const SurfaceComplex& cur = trail.rounds.back().fine;
    try {
      Hypersurface image = trail.carry(m, s);
      std::vector<DirectedWalk> walks = hypersurface_walks(cur, image);
      std::vector<DirectedWalk> par;
      for (DirectedWalk w : walks) {
        if (side == Side::negative) std::reverse(w.verts.begin(), w.verts.end());
        par.push_back(left_parallel(cur, w));
      }
      Hypersurface pushed = hypersurface_from_walks(cur, par, side == Side::positive);
      for (int c : pushed.cells)
        if (image.find(c) != -1) throw internal_error("pushed curve shares a cell");
      if (!vertex_disjoint(cur, image, pushed))
        throw internal_error("pushed curve shares a vertex");
      if (!classes_equal(cur, image, pushed))
        throw internal_error("push-off changed the homology class");

      PushoffResult res;
      res.image = std::move(image);
      res.pushed = std::move(pushed);
      for (const auto& p : passengers) res.passengers.push_back(trail.carry(m, p));
      res.complex = cur;
      res.trail = std::move(trail);
      return res;
    } catch (const Error&) {
      if (attempt >= extra_rounds_budget) throw;
      trail.rounds.push_back(barycentric_subdivide(cur));
    }
  }
}

}  // namespace cobord
